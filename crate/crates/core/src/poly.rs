//! Polynomials of the free nonassociative algebra: finite linear combinations
//! of monomials with exact coefficients. Nothing here assumes associativity
//! or commutativity; the product of monomials `u`, `v` is the tree `(u v)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{Field, FieldError, Scalar};
use crate::monomial::{Indeterminate, Monomial, MonomialError, Parser};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("variable {0} has no assigned value")]
    Unassigned(Indeterminate),
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Occurrence count of each indeterminate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multidegree(BTreeMap<Indeterminate, usize>);

impl Multidegree {
    pub fn new() -> Self {
        Multidegree(BTreeMap::new())
    }

    pub fn of(m: &Monomial) -> Multidegree {
        let mut md = Multidegree::new();
        for leaf in m.leaves() {
            md.bump(leaf, 1);
        }
        md
    }

    /// Each listed indeterminate exactly once.
    pub fn multilinear<'a>(vars: impl IntoIterator<Item = &'a Indeterminate>) -> Multidegree {
        let mut md = Multidegree::new();
        for v in vars {
            md.0.insert(v.clone(), 1);
        }
        md
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (Indeterminate, usize)>) -> Multidegree {
        let mut md = Multidegree::new();
        for (v, c) in counts {
            md.bump(&v, c);
        }
        md
    }

    fn bump(&mut self, v: &Indeterminate, by: usize) {
        if by > 0 {
            *self.0.entry(v.clone()).or_insert(0) += by;
        }
    }

    pub fn get(&self, v: &Indeterminate) -> usize {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = &Indeterminate> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Indeterminate, usize)> {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.values().all(|&c| c == 1)
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.bump(v, c);
        }
        out
    }

    pub fn scaled(&self, k: usize) -> Multidegree {
        Multidegree(self.0.iter().filter(|_| k > 0).map(|(v, c)| (v.clone(), c * k)).collect())
    }

    /// `self - other`, if `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            let have = out.get(v);
            if have < c {
                return None;
            }
            if have == c {
                out.0.remove(v);
            } else {
                out.0.insert(v.clone(), have - c);
            }
        }
        Some(out)
    }

    /// Every multidegree `e` with `0 <= e <= self`, including both ends.
    pub fn sub_multidegrees(&self) -> Vec<Multidegree> {
        let mut out = vec![Multidegree::new()];
        for (v, c) in self.iter() {
            out = out
                .into_iter()
                .flat_map(|md| {
                    (0..=c).map(move |k| {
                        let mut md = md.clone();
                        md.bump(v, k);
                        md
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (v, c)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{c}")?;
        }
        f.write_str("}")
    }
}

/// All monomials of a given multidegree, memoized across calls.
#[derive(Debug, Default)]
pub struct MonomialsByDegree {
    cache: HashMap<Multidegree, Vec<Monomial>>,
}

impl MonomialsByDegree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, md: &Multidegree) -> &[Monomial] {
        if !self.cache.contains_key(md) {
            let v = self.build(md);
            self.cache.insert(md.clone(), v);
        }
        &self.cache[md]
    }

    fn build(&mut self, md: &Multidegree) -> Vec<Monomial> {
        let total = md.total();
        if total == 0 {
            return Vec::new();
        }
        if total == 1 {
            let v = md.vars().next().expect("total 1").clone();
            return vec![Monomial::leaf(v)];
        }
        let mut out = Vec::new();
        for left in md.sub_multidegrees() {
            let lt = left.total();
            if lt == 0 || lt == total {
                continue;
            }
            let right = md.checked_sub(&left).expect("sub-multidegree");
            let ls = self.get(&left).to_vec();
            let rs = self.get(&right).to_vec();
            for l in &ls {
                for r in &rs {
                    out.push(Monomial::product(l, r));
                }
            }
        }
        out.sort();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Polynomial::term(field, field.one(), m)
    }

    pub fn term(field: Field, c: Scalar, m: Monomial) -> Self {
        let mut p = Polynomial::zero(field);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Self {
        let mut p = Polynomial::zero(field);
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `self += c * m`.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        let c = self.field.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = self.field.add(slot, &c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Polynomial) -> Result<(), PolyError> {
        self.field.ensure_same(&other.field)?;
        for (m, x) in &other.terms {
            self.add_term(m.clone(), self.field.mul(c, x));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut out = self.clone();
        out.add_scaled(&self.field.neg(&Scalar::one()), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let c = self.field.normalize(c.clone());
        let mut out = Polynomial::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), self.field.mul(&c, x));
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.field.neg(&Scalar::one()))
    }

    /// Bilinear extension of the monomial product.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.field.ensure_same(&other.field)?;
        let mut out = Polynomial::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(Monomial::product(u, v), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    /// The multiplication-respecting linear extension of `assignment`.
    pub fn substitute(&self, assignment: &BTreeMap<Indeterminate, Polynomial>) -> Result<Polynomial, PolyError> {
        for p in assignment.values() {
            self.field.ensure_same(&p.field)?;
        }
        let mut memo: HashMap<Monomial, Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let image = expand(m, assignment, &mut memo)?;
            out.add_scaled(c, &image)?;
        }
        Ok(out)
    }

    /// Replaces leaves by monomials. Leaves `f` maps to `None` stay put.
    pub fn substitute_monomials(&self, f: &impl Fn(&Indeterminate) -> Option<Monomial>) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let image = m.map_leaves(&mut |i| f(i).unwrap_or_else(|| Monomial::leaf(i.clone())));
            out.add_term(image, c.clone());
        }
        out
    }

    /// Applies `f` to every monomial and recombines.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Each monomial replaced by its commutative normal form.
    pub fn commutative_normal_form(&self) -> Polynomial {
        self.map_monomials(Monomial::commutative_normal_form)
    }

    pub fn variables(&self) -> BTreeSet<Indeterminate> {
        self.terms.keys().flat_map(|m| m.leaves().into_iter().cloned()).collect()
    }

    /// Splits into multihomogeneous components; the components sum to `self`.
    pub fn multidegree_components(&self) -> BTreeMap<Multidegree, Polynomial> {
        let mut out: BTreeMap<Multidegree, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(Multidegree::of(m))
                .or_insert_with(|| Polynomial::zero(self.field))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The component in which every variable of `vars` occurs exactly once
    /// and nothing else occurs.
    pub fn multilinear_part(&self, vars: &BTreeSet<Indeterminate>) -> Polynomial {
        let target = Multidegree::multilinear(vars);
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            if Multidegree::of(m) == target {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The common multidegree of all terms, if there is one.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.keys().map(Multidegree::of);
        let first = it.next()?;
        it.all(|md| md == first).then_some(first)
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| Multidegree::of(m).is_multilinear()) && self.is_multihomogeneous()
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Substitutes `var -> fresh[0] + fresh[1] + ...` and keeps the component
    /// in which `fresh[j]` occurs exactly `parts[j]` times. Terms whose degree
    /// in `var` differs from the sum of `parts` contribute nothing.
    pub fn polarize(&self, var: &Indeterminate, parts: &[usize], fresh: &[Indeterminate]) -> Polynomial {
        assert_eq!(parts.len(), fresh.len());
        let total: usize = parts.iter().sum();
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let k = m.leaves().into_iter().filter(|l| *l == var).count();
            if k != total {
                continue;
            }
            let mut remaining = parts.to_vec();
            let mut choice = Vec::with_capacity(k);
            assign_positions(&mut remaining, &mut choice, k, &mut |choice| {
                let mut pos = 0usize;
                let image = m.map_leaves(&mut |l| {
                    if l == var {
                        pos += 1;
                        Monomial::leaf(fresh[choice[pos - 1]].clone())
                    } else {
                        Monomial::leaf(l.clone())
                    }
                });
                out.add_term(image, c.clone());
            });
        }
        out
    }

    /// Full linearization in `var`: every occurrence becomes a distinct fresh variable.
    pub fn linearize(&self, var: &Indeterminate, fresh: &[Indeterminate]) -> Polynomial {
        self.polarize(var, &vec![1; fresh.len()], fresh)
    }

    /// Parses the text form `COEFF * MON + ... - MON`, with `COEFF` as `a` or `a/b`.
    pub fn parse(field: Field, s: &str) -> Result<Polynomial, PolyError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let err = |p: &Parser, msg: &str| PolyError::Parse { pos: p.pos, msg: msg.to_string() };
        let mut out = Polynomial::zero(field);
        let mut first = true;
        loop {
            let mut negative = false;
            match p.peek() {
                None if first => return Err(err(&p, "empty polynomial")),
                None => break,
                Some(b'+') if !first => p.pos += 1,
                Some(b'-') => {
                    negative = true;
                    p.pos += 1;
                }
                Some(_) if first => {}
                Some(_) => return Err(err(&p, "expected '+' or '-'")),
            }
            first = false;
            let coeff = if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
                let start = p.pos;
                while matches!(p.src.get(p.pos), Some(c) if c.is_ascii_digit() || *c == b'/' || c.is_ascii_whitespace())
                {
                    p.pos += 1;
                }
                let text = std::str::from_utf8(&p.src[start..p.pos]).expect("ascii");
                let c = field.parse_scalar(text)?;
                match p.peek() {
                    Some(b'*') => p.pos += 1,
                    None if c.is_zero() && out.is_zero() => return Ok(out),
                    _ => return Err(err(&p, "expected '*' after coefficient")),
                }
                c
            } else {
                field.one()
            };
            let m = p.sequence(false)?;
            let c = if negative { field.neg(&coeff) } else { coeff };
            out.add_term(m, c);
        }
        Ok(out)
    }
}

/// Calls `visit` with every sequence of length `k` using label `j` exactly `remaining[j]` times.
fn assign_positions(remaining: &mut [usize], choice: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if choice.len() == k {
        visit(choice);
        return;
    }
    for j in 0..remaining.len() {
        if remaining[j] > 0 {
            remaining[j] -= 1;
            choice.push(j);
            assign_positions(remaining, choice, k, visit);
            choice.pop();
            remaining[j] += 1;
        }
    }
}

fn expand(
    m: &Monomial,
    assignment: &BTreeMap<Indeterminate, Polynomial>,
    memo: &mut HashMap<Monomial, Polynomial>,
) -> Result<Polynomial, PolyError> {
    if let Some(p) = memo.get(m) {
        return Ok(p.clone());
    }
    let p = match m.factors() {
        None => {
            let leaf = m.as_leaf().expect("leaf");
            assignment.get(leaf).cloned().ok_or_else(|| PolyError::Unassigned(leaf.clone()))?
        }
        Some((l, r)) => {
            let lp = expand(l, assignment, memo)?;
            let rp = expand(r, assignment, memo)?;
            lp.mul(&rp)?
        }
    };
    memo.insert(m.clone(), p.clone());
    Ok(p)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = self.field.is_negative(c);
            let mag = if negative { self.field.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !mag.is_one() {
                write!(f, "{} * ", self.field.format_scalar(&mag))?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
