//! Finite-level shadows of the openness argument: the complement `C_n` of
//! `S_(n)` spanned by short monomials in the generators, and the least `d`
//! for which `S_(n) = sum_{u in U_(n,d)} f_u(S)`, where `U_(n,d)` holds the
//! monomials of lengths `n..=n+d` in `x_1..x_r, y` with `y` exactly once and
//! `f_u(a) = u(g_1, ..., g_r, a)`.

use std::collections::BTreeMap;

use super::{Level, TowerError, TruncatedTower};
use crate::config::Limits;
use crate::findim::{evaluate, lower_filtration, subspace_product, Element, StructAlgebra, Subspace};
use crate::monomial::{enumerate_monomials, Indeterminate};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimEntry {
    pub level: usize,
    pub codim: usize,
    /// Whether the values of monomials of length `< n` in the generators
    /// span a complement of `S_(n)`.
    pub complement_ok: bool,
}

/// `V_1, ..., V_len`, where `V_l` is spanned by the values of all monomials
/// of length `l` in the generators: `V_l = sum_{a+b=l} V_a V_b`.
fn value_spans(alg: &StructAlgebra, gens: &[Element], len: usize) -> Vec<Subspace> {
    let mut v = vec![Subspace::span_elements(alg.field(), alg.dim(), gens)];
    for l in 2..=len {
        let mut acc = Subspace::zero(alg.field(), alg.dim());
        for a in 1..l {
            acc = acc.sum(&subspace_product(alg, &v[a - 1], &v[l - a - 1]));
        }
        v.push(acc);
    }
    v
}

/// `C_n`: the span of values of all monomials of length `< n` in `gens`.
pub fn lower_length_span(alg: &StructAlgebra, gens: &[Element], n: usize) -> Subspace {
    value_spans(alg, gens, n.saturating_sub(1))
        .into_iter()
        .fold(Subspace::zero(alg.field(), alg.dim()), |acc, v| acc.sum(&v))
}

pub fn level_codim(level: &Level<'_>, n: usize) -> CodimEntry {
    let alg = level.algebra();
    let filt = lower_filtration(alg, n.max(1));
    let c = lower_length_span(alg, &level.generators(), n);
    CodimEntry { level: level.index(), codim: filt.codim(), complement_ok: c.sum(&filt).dim() == alg.dim() }
}

/// Codimension of `(S_i)_(n)` at every level, with the complement check.
pub fn filtration_codim_profile(tower: &TruncatedTower, n: usize) -> Vec<CodimEntry> {
    tower.levels().map(|l| level_codim(&l, n)).collect()
}

/// `sum_{u in U_(n,d)} f_u(S)`, built by splitting each `u` at its root:
/// the span `W_l` of all `u(g, a)` with `u` of length `l` is
/// `sum_{a+b=l} (W_a V_b + V_b W_a)`, starting from `W_1 = S`.
pub fn separating_image(alg: &StructAlgebra, gens: &[Element], n: usize, d: usize) -> Subspace {
    let top = n + d;
    let v = value_spans(alg, gens, top);
    let mut w = vec![Subspace::whole(alg.field(), alg.dim())];
    for l in 2..=top {
        let mut acc = Subspace::zero(alg.field(), alg.dim());
        for a in 1..l {
            let (wa, vb) = (&w[a - 1], &v[l - a - 1]);
            acc = acc.sum(&subspace_product(alg, wa, vb)).sum(&subspace_product(alg, vb, wa));
        }
        w.push(acc);
    }
    w[n - 1..].iter().fold(Subspace::zero(alg.field(), alg.dim()), |acc, x| acc.sum(x))
}

/// [`separating_image`] by brute force: every `u` in `U_(n,d)` is enumerated
/// and evaluated at every basis element. Only for small cases.
pub fn separating_image_enumerated(
    alg: &StructAlgebra,
    gens: &[Element],
    n: usize,
    d: usize,
    limits: &Limits,
) -> Result<Subspace, TowerError> {
    let xs: Vec<Indeterminate> = (1..=gens.len()).map(Indeterminate::x).collect();
    let mut assignment: BTreeMap<Indeterminate, Element> = xs.iter().cloned().zip(gens.iter().cloned()).collect();
    let mut images = Vec::new();
    for len in n..=n + d {
        let us = enumerate_monomials(&xs, len, 1, limits)
            .map_err(|_| TowerError::EnumerationCap { length: len, cap: limits.max_enumeration_length })?;
        for u in us {
            let f = Polynomial::monomial(alg.field(), u);
            for j in 0..alg.dim() {
                assignment.insert(Indeterminate::Placeholder, alg.basis_element(j));
                images.push(evaluate(&f, alg, &assignment)?);
            }
        }
    }
    Ok(Subspace::span_elements(alg.field(), alg.dim(), &images))
}

/// Least `d <= d_max` with `S_(n) = sum_{u in U_(n,d)} f_u(S)`, or `None`.
pub fn level_separation_defect(level: &Level<'_>, n: usize, d_max: usize) -> Option<usize> {
    let alg = level.algebra();
    let target = lower_filtration(alg, n);
    let gens = level.generators();
    (0..=d_max).find(|&d| separating_image(alg, &gens, n, d).dim() == target.dim())
}

/// [`level_separation_defect`] at every level; `None` marks "no `d <= d_max`".
pub fn separation_defect(
    tower: &TruncatedTower,
    n: usize,
    d_max: usize,
    limits: &Limits,
) -> Result<Vec<(usize, Option<usize>)>, TowerError> {
    if n < 2 {
        return Err(TowerError::InvalidArgument(format!("the separation defect needs n >= 2, got {n}")));
    }
    if n + d_max > limits.max_enumeration_length {
        return Err(TowerError::EnumerationCap { length: n + d_max, cap: limits.max_enumeration_length });
    }
    Ok(tower.levels().map(|l| (l.index(), level_separation_defect(&l, n, d_max))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::tower::Family;

    const Q: Field = Field::Rationals;

    #[test]
    fn codim_profiles() {
        let limits = Limits::default();
        let pqr = TruncatedTower::new(Family::Pqr, Q, 2, 6, &limits).unwrap();
        for e in filtration_codim_profile(&pqr, 2) {
            assert_eq!((e.codim, e.complement_ok), (1, true), "{e:?}");
        }
        for e in filtration_codim_profile(&pqr, 1) {
            assert_eq!(e.codim, 0);
        }
        let free = TruncatedTower::new(Family::FreeAssoc { generators: 2 }, Q, 3, 5, &limits).unwrap();
        for e in filtration_codim_profile(&free, 3) {
            assert_eq!((e.codim, e.complement_ok), (6, true), "{e:?}");
        }
    }

    #[test]
    fn recursive_image_matches_enumeration() {
        let limits = Limits::default();
        for (family, i) in [(Family::Pqr, 3), (Family::Pqr, 4), (Family::PqrAlt, 3), (Family::FreeAssoc { generators: 2 }, 3)]
        {
            let t = TruncatedTower::new(family, Q, i, i, &limits).unwrap();
            let level = t.level(i).unwrap();
            let gens = level.generators();
            for d in 0..=2 {
                let fast = separating_image(level.algebra(), &gens, 2, d);
                let slow = separating_image_enumerated(level.algebra(), &gens, 2, d, &limits).unwrap();
                assert_eq!(fast, slow, "{family} level {i}, d = {d}");
            }
        }
    }

    #[test]
    fn defects() {
        let limits = Limits::default();
        let free = TruncatedTower::new(Family::FreeAssoc { generators: 2 }, Q, 2, 5, &limits).unwrap();
        assert!(separation_defect(&free, 2, 4, &limits).unwrap().iter().all(|(_, d)| *d == Some(0)));
        let pqr = TruncatedTower::new(Family::Pqr, Q, 3, 6, &limits).unwrap();
        let ds: Vec<usize> = separation_defect(&pqr, 2, 8, &limits).unwrap().iter().map(|(_, d)| d.unwrap()).collect();
        assert!(ds.windows(2).all(|w| w[0] < w[1]), "{ds:?}");
        let flat = TruncatedTower::new(Family::FreeAssoc { generators: 3 }, Q, 1, 1, &limits).unwrap();
        assert_eq!(separation_defect(&flat, 2, 0, &limits).unwrap(), vec![(1, Some(0))]);
        assert!(separation_defect(&pqr, 1, 2, &limits).is_err());
        assert!(matches!(separation_defect(&pqr, 2, 20, &limits), Err(TowerError::EnumerationCap { .. })));
    }
}
