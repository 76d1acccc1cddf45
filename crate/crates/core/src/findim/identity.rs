//! Evaluation of free-algebra polynomials in a concrete algebra, and a
//! decision procedure for "f vanishes under every substitution".

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::algebra::{Element, StructAlgebra};
use super::AlgebraError;
use crate::config::Limits;
use crate::linalg::SparseVec;
use crate::monomial::{Indeterminate, Monomial, Var};
use crate::poly::Polynomial;

/// How [`check_identity`] reached its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStrategy {
    /// The polynomial is zero.
    Trivial,
    /// Multilinear: all tuples of basis elements.
    BasisTuples,
    /// Fully linearized first; equivalent when the field has more elements than any variable's degree.
    Linearized,
    /// Every tuple of field elements (small finite fields only).
    Exhaustive,
    /// Coefficients of the evaluation as a function of the coordinates,
    /// with exponents reduced by `a^p = a`.
    ReducedCoefficients,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub strategy: CheckStrategy,
}

pub fn evaluate(
    f: &Polynomial,
    alg: &StructAlgebra,
    assignment: &BTreeMap<Indeterminate, Element>,
) -> Result<Element, AlgebraError> {
    alg.field().ensure_same(&f.field())?;
    for e in assignment.values() {
        if e.dim() != alg.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: alg.dim(), found: e.dim() });
        }
    }
    let mut memo = HashMap::new();
    let mut acc = alg.zero_element();
    for (m, c) in f.terms() {
        let v = eval_monomial(m, alg, assignment, &mut memo)?;
        acc = acc.add(&alg.field(), &v.scale(&alg.field(), c));
    }
    Ok(acc)
}

fn eval_monomial(
    m: &Monomial,
    alg: &StructAlgebra,
    assignment: &BTreeMap<Indeterminate, Element>,
    memo: &mut HashMap<Monomial, Element>,
) -> Result<Element, AlgebraError> {
    if let Some(v) = memo.get(m) {
        return Ok(v.clone());
    }
    let v = match m.factors() {
        None => {
            let leaf = m.as_leaf().expect("leaf");
            assignment.get(leaf).cloned().ok_or_else(|| AlgebraError::Unassigned(leaf.to_string()))?
        }
        Some((l, r)) => {
            let a = eval_monomial(l, alg, assignment, memo)?;
            if a.is_zero() {
                a
            } else {
                let b = eval_monomial(r, alg, assignment, memo)?;
                alg.mul(&a, &b)
            }
        }
    };
    memo.insert(m.clone(), v.clone());
    Ok(v)
}

/// [`check_identity`] with default limits.
pub fn satisfies_identity(alg: &StructAlgebra, f: &Polynomial) -> Result<bool, AlgebraError> {
    check_identity(alg, f, &Limits::default()).map(|c| c.holds)
}

/// Decides whether `f` vanishes identically on `alg`.
///
/// Multilinear identities are checked on basis tuples. Otherwise, when the
/// field is `Q` or `GF(p)` with `p` above every variable's degree, the full
/// linearization is equivalent and gets the same treatment. Over small prime
/// fields the check walks all tuples when that is cheap, and otherwise
/// compares coefficients of the evaluation as a reduced polynomial function.
pub fn check_identity(alg: &StructAlgebra, f: &Polynomial, limits: &Limits) -> Result<IdentityCheck, AlgebraError> {
    alg.field().ensure_same(&f.field())?;
    if f.is_zero() {
        return Ok(IdentityCheck { holds: true, strategy: CheckStrategy::Trivial });
    }
    let md = f.multidegree().ok_or(AlgebraError::NotHomogeneous)?;
    if md.total() > limits.max_degree {
        return Err(AlgebraError::DegreeCap { degree: md.total(), cap: limits.max_degree });
    }
    if md.is_multilinear() {
        return Ok(IdentityCheck { holds: basis_tuples_vanish(alg, f), strategy: CheckStrategy::BasisTuples });
    }
    let max_var_degree = md.iter().map(|(_, k)| k).max().unwrap_or(0) as u64;
    let field = alg.field();
    if field.order().is_none_or(|q| q > max_var_degree) {
        let mut lin = f.clone();
        for (v, k) in md.iter() {
            if k > 1 {
                let fresh: Vec<Indeterminate> = (1..=k).map(|j| fresh_var(v, j)).collect();
                lin = lin.linearize(v, &fresh);
            }
        }
        return Ok(IdentityCheck { holds: basis_tuples_vanish(alg, &lin), strategy: CheckStrategy::Linearized });
    }
    let q = field.order().expect("finite field");
    let nvars = md.iter().count() as u32;
    let exhaustive = (q as f64).powf((alg.dim() as u32 * nvars) as f64);
    if exhaustive <= limits.exhaustive_bound as f64 {
        return Ok(IdentityCheck { holds: exhaustive_vanishes(alg, f)?, strategy: CheckStrategy::Exhaustive });
    }
    let holds = reduced_coefficients_vanish(alg, f, limits)?;
    Ok(IdentityCheck { holds, strategy: CheckStrategy::ReducedCoefficients })
}

fn fresh_var(v: &Indeterminate, j: usize) -> Indeterminate {
    Indeterminate::Var(Var::new(&format!("{v}#{j}")))
}

/// Values of a multilinear submonomial on all basis tuples, keyed by the
/// chosen basis index of each variable (`u32::MAX` where the variable does
/// not occur). Zero values are not stored.
type Tensor = HashMap<Vec<u32>, SparseVec>;

fn basis_tuples_vanish(alg: &StructAlgebra, f: &Polynomial) -> bool {
    let vars: Vec<Indeterminate> = f.variables().into_iter().collect();
    let slot: HashMap<&Indeterminate, usize> = vars.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut memo: HashMap<Monomial, Rc<Tensor>> = HashMap::new();
    let field = alg.field();
    let mut acc: Tensor = HashMap::new();
    for (m, c) in f.terms() {
        let t = tensor(m, alg, &slot, vars.len(), &mut memo);
        for (key, v) in t.iter() {
            let entry = acc.entry(key.clone()).or_default();
            *entry = entry.add_scaled(&field, c, v);
        }
    }
    acc.values().all(SparseVec::is_zero)
}

fn tensor(
    m: &Monomial,
    alg: &StructAlgebra,
    slot: &HashMap<&Indeterminate, usize>,
    width: usize,
    memo: &mut HashMap<Monomial, Rc<Tensor>>,
) -> Rc<Tensor> {
    if let Some(t) = memo.get(m) {
        return t.clone();
    }
    let t = match m.factors() {
        None => {
            let k = slot[m.as_leaf().expect("leaf")];
            (0..alg.dim())
                .map(|i| {
                    let mut key = vec![u32::MAX; width];
                    key[k] = i as u32;
                    (key, SparseVec::unit(i))
                })
                .collect()
        }
        Some((l, r)) => {
            let tl = tensor(l, alg, slot, width, memo);
            let tr = if tl.is_empty() { Rc::new(Tensor::new()) } else { tensor(r, alg, slot, width, memo) };
            let mut out = Tensor::new();
            for (ka, va) in tl.iter() {
                for (kb, vb) in tr.iter() {
                    let v = alg.mul_vec(va, vb);
                    if v.is_zero() {
                        continue;
                    }
                    let key = ka.iter().zip(kb).map(|(a, b)| if *a == u32::MAX { *b } else { *a }).collect();
                    out.insert(key, v);
                }
            }
            out
        }
    };
    let t = Rc::new(t);
    memo.insert(m.clone(), t.clone());
    t
}

fn exhaustive_vanishes(alg: &StructAlgebra, f: &Polynomial) -> Result<bool, AlgebraError> {
    let field = alg.field();
    let q = field.order().expect("finite field");
    let vars: Vec<Indeterminate> = f.variables().into_iter().collect();
    let n = vars.len() * alg.dim();
    let mut digits = vec![0u64; n];
    loop {
        let mut assignment = BTreeMap::new();
        for (k, v) in vars.iter().enumerate() {
            let coords: Vec<_> = digits[k * alg.dim()..(k + 1) * alg.dim()]
                .iter()
                .map(|d| field.from_i64(*d as i64))
                .collect();
            assignment.insert(v.clone(), Element::from_dense(&coords));
        }
        if !evaluate(f, alg, &assignment)?.is_zero() {
            return Ok(false);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return Ok(true);
            }
            digits[k] += 1;
            if digits[k] < q {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// Multisets of size `k` from `0..dim`, as `(index, multiplicity)` lists.
fn multisets(dim: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(start: usize, dim: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            for m in 1..=left {
                cur.push((i, m));
                go(i + 1, dim, left - m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, dim, k, &mut Vec::new(), &mut out);
    out
}

/// Basis indices with multiplicities.
type Multiset = Vec<(usize, usize)>;

fn reduced_coefficients_vanish(alg: &StructAlgebra, f: &Polynomial, limits: &Limits) -> Result<bool, AlgebraError> {
    let field = alg.field();
    let p = field.order().expect("finite field") as usize;
    let md = f.multidegree().expect("multihomogeneous");
    let per_var: Vec<(Indeterminate, Vec<Multiset>)> =
        md.iter().map(|(v, k)| (v.clone(), multisets(alg.dim(), k))).collect();
    let count: f64 = per_var.iter().map(|(_, s)| s.len() as f64).product();
    if count > limits.max_coefficient_classes as f64 {
        return Err(AlgebraError::Undecidable(format!(
            "{count} coefficient classes over {} in dimension {}",
            field,
            alg.dim()
        )));
    }
    // the coefficient of prod a_i^{m_i}; exponents m >= 1 reduce to ((m-1) mod (p-1)) + 1
    let reduce = |m: usize| (m - 1) % (p - 1) + 1;
    let mut groups: HashMap<Vec<(usize, usize, usize)>, Element> = HashMap::new();
    let mut choice = vec![0usize; per_var.len()];
    loop {
        let mut g = f.clone();
        let mut assignment = BTreeMap::new();
        let mut key = Vec::new();
        for (k, (v, sets)) in per_var.iter().enumerate() {
            let set = &sets[choice[k]];
            let fresh: Vec<Indeterminate> = (1..=set.len()).map(|j| fresh_var(v, j)).collect();
            let parts: Vec<usize> = set.iter().map(|(_, m)| *m).collect();
            g = g.polarize(v, &parts, &fresh);
            for ((i, m), w) in set.iter().zip(&fresh) {
                assignment.insert(w.clone(), alg.basis_element(*i));
                key.push((k, *i, reduce(*m)));
            }
        }
        let value = evaluate(&g, alg, &assignment)?;
        let slot = groups.entry(key).or_insert_with(|| alg.zero_element());
        *slot = slot.add(&field, &value);
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(groups.values().all(Element::is_zero));
            }
            choice[k] += 1;
            if choice[k] < per_var[k].1.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn poly(field: Field, s: &str) -> Polynomial {
        Polynomial::parse(field, s).unwrap()
    }

    /// `GF(2)` algebra with basis `e`, `f` and `e e = f`: `x x` fails but the
    /// linearized form `x y + y x` holds, the classic finite-field gap.
    fn gf2_square() -> StructAlgebra {
        let mut a = StructAlgebra::with_labels(Field::Prime(2), &["e", "f"]);
        a.set_product(0, 0, SparseVec::unit(1));
        a
    }

    #[test]
    fn finite_field_caveat() {
        let a = gf2_square();
        let f2 = Field::Prime(2);
        assert!(satisfies_identity(&a, &poly(f2, "x w + w x")).unwrap());
        let c = check_identity(&a, &poly(f2, "x x"), &Limits::default()).unwrap();
        assert_eq!(c, IdentityCheck { holds: false, strategy: CheckStrategy::Exhaustive });
    }

    #[test]
    fn reduced_coefficients_agree_with_exhaustive() {
        let a = gf2_square();
        let f2 = Field::Prime(2);
        let tight = Limits { exhaustive_bound: 1, ..Limits::default() };
        let roomy = Limits { exhaustive_bound: 1 << 10, ..Limits::default() };
        for s in ["x x", "(x x) x", "x (x x)", "(x x)(x x)", "(x w) x", "(x w) x + (x x) w", "(x w) x - x (w x)"] {
            let f = poly(f2, s);
            let by_tuples = check_identity(&a, &f, &roomy).unwrap();
            let by_coeffs = check_identity(&a, &f, &tight).unwrap();
            if f.is_multilinear() {
                continue;
            }
            assert_eq!(by_tuples.strategy, CheckStrategy::Exhaustive, "{s}");
            assert_eq!(by_coeffs.strategy, CheckStrategy::ReducedCoefficients, "{s}");
            assert_eq!(by_tuples.holds, by_coeffs.holds, "{s}");
        }
    }

    #[test]
    fn errors() {
        let a = gf2_square();
        let q = poly(Field::Rationals, "x x");
        assert!(matches!(satisfies_identity(&a, &q), Err(AlgebraError::Field(_))));
        let f2 = Field::Prime(2);
        assert_eq!(satisfies_identity(&a, &poly(f2, "x + x x")), Err(AlgebraError::NotHomogeneous));
        let deep = poly(f2, "((((x1 x2) x3) x4) x5)");
        let limits = Limits { max_degree: 4, ..Limits::default() };
        assert_eq!(check_identity(&a, &deep, &limits), Err(AlgebraError::DegreeCap { degree: 5, cap: 4 }));
        let e = evaluate(&poly(f2, "x w"), &a, &BTreeMap::new());
        assert_eq!(e, Err(AlgebraError::Unassigned("x".into())));
    }

    #[test]
    fn evaluate_zero() {
        let a = gf2_square();
        let z = evaluate(&Polynomial::zero(Field::Prime(2)), &a, &BTreeMap::new()).unwrap();
        assert!(z.is_zero());
    }
}
