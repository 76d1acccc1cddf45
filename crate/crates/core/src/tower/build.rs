use super::{Family, TowerError};
use crate::config::Limits;
use crate::field::Field;
use crate::findim::builtin::lie_from_associative;
use crate::findim::StructAlgebra;
use crate::linalg::SparseVec;

fn check_level(family: Family, i: usize) -> Result<(), TowerError> {
    if i < family.min_level() {
        return Err(TowerError::LevelTooSmall { family, level: i, min: family.min_level() });
    }
    Ok(())
}

/// Level `S_i`: basis `p, q1..q_{i-1}, r{m}_{n}` (`m, n < i`) with
/// `pp = q1`, `p q_m = q_{m+1}`, `q_m q_n = r_mn`, all other products zero,
/// and everything with an index `>= i` truncated away.
pub fn build_pqr(i: usize, field: Field) -> Result<StructAlgebra, TowerError> {
    check_level(Family::Pqr, i)?;
    let k = i - 1;
    let mut labels = vec!["p".to_string()];
    labels.extend((1..=k).map(|m| format!("q{m}")));
    for m in 1..=k {
        labels.extend((1..=k).map(|n| format!("r{m}_{n}")));
    }
    let q = |m: usize| m;
    let r = |m: usize, n: usize| k + (m - 1) * k + n;
    let mut alg = StructAlgebra::new(field, labels);
    alg.set_product(0, 0, SparseVec::unit(q(1)));
    for m in 1..k {
        alg.set_product(0, q(m), SparseVec::unit(q(m + 1)));
    }
    for m in 1..=k {
        for n in 1..=k {
            alg.set_product(q(m), q(n), SparseVec::unit(r(m, n)));
        }
    }
    Ok(alg)
}

/// The commutative variant: `q_m p = q_{m+1}` as well, and `r{m}_{n}` with
/// `m <= n` standing for both `r_mn` and `r_nm`.
#[allow(clippy::needless_range_loop)]
pub fn build_pqr_comm(i: usize, field: Field) -> Result<StructAlgebra, TowerError> {
    check_level(Family::PqrComm, i)?;
    let k = i - 1;
    let mut labels = vec!["p".to_string()];
    labels.extend((1..=k).map(|m| format!("q{m}")));
    let mut r_index = vec![vec![0usize; k + 1]; k + 1];
    for m in 1..=k {
        for n in m..=k {
            r_index[m][n] = labels.len();
            r_index[n][m] = labels.len();
            labels.push(format!("r{m}_{n}"));
        }
    }
    let mut alg = StructAlgebra::new(field, labels);
    alg.set_product(0, 0, SparseVec::unit(1));
    for m in 1..k {
        alg.set_product(0, m, SparseVec::unit(m + 1));
        alg.set_product(m, 0, SparseVec::unit(m + 1));
    }
    for m in 1..=k {
        for n in 1..=k {
            alg.set_product(m, n, SparseVec::unit(r_index[m][n]));
        }
    }
    Ok(alg)
}

/// The alternating variant: the subalgebra generated by `p` and `q1` under
/// `x * y = xy - yx` on [`build_pqr`]. Its basis is `p`, the `q_m`, and
/// `s{m}_{n} = r_mn - r_nm` for `m < n`.
pub fn build_pqr_alt(i: usize, field: Field) -> Result<StructAlgebra, TowerError> {
    check_level(Family::PqrAlt, i)?;
    let pqr = build_pqr(i, field)?;
    let bracket = lie_from_associative(&pqr);
    let gens = [pqr.element("p").expect("p"), pqr.element("q1").expect("q1")];
    let sub = bracket.generated_subalgebra(&gens);
    // reduced echelon basis vectors lead with p, q_m, or r_mn (m < n)
    let labels = sub.pivots().map(|c| pqr.label(c).replacen('r', "s", 1)).collect();
    Ok(bracket.restrict(&sub, labels)?)
}

/// Associative words of length `1..=c` in `g1..gr`, multiplied by
/// concatenation and truncated beyond length `c`. A word is labelled by its
/// letters joined with `_`, e.g. `g1_2_2` for `g1 g2 g2`.
pub fn build_free_nilpotent_assoc(r: usize, c: usize, field: Field, limits: &Limits) -> Result<StructAlgebra, TowerError> {
    if r == 0 {
        return Err(TowerError::InvalidArgument("at least one generator is needed".into()));
    }
    check_level(Family::FreeAssoc { generators: r }, c)?;
    let dim = (1..=c as u32).try_fold(0usize, |acc, l| r.checked_pow(l).and_then(|w| acc.checked_add(w)));
    match dim {
        Some(d) if d <= limits.max_dimension => {}
        other => return Err(TowerError::DimensionCap { dim: other.unwrap_or(usize::MAX), cap: limits.max_dimension }),
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..c {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=r).map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
    }
    let index: std::collections::HashMap<&[usize], usize> =
        words.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
    let labels = words
        .iter()
        .map(|w| format!("g{}", w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("_")))
        .collect();
    let mut alg = StructAlgebra::new(field, labels);
    for (a, u) in words.iter().enumerate() {
        for (b, v) in words.iter().enumerate() {
            if u.len() + v.len() <= c {
                let uv = [u.as_slice(), v.as_slice()].concat();
                alg.set_product(a, b, SparseVec::unit(index[uv.as_slice()]));
            }
        }
    }
    Ok(alg)
}

/// Builds level `i` of `family`.
pub(crate) fn build_level(family: Family, i: usize, field: Field, limits: &Limits) -> Result<StructAlgebra, TowerError> {
    match family {
        Family::Pqr => build_pqr(i, field),
        Family::PqrComm => build_pqr_comm(i, field),
        Family::PqrAlt => build_pqr_alt(i, field),
        Family::FreeAssoc { generators } => build_free_nilpotent_assoc(generators, i, field, limits),
    }
}
