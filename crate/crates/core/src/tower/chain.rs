use super::build::build_level;
use super::{Family, Level, TowerError};
use crate::config::Limits;
use crate::field::Field;
use crate::findim::{Element, StructAlgebra};
use crate::linalg::SparseVec;

/// The truncation `S_{i+1} -> S_i`: basis elements that survive keep their
/// label, the rest go to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingMap {
    /// `images[k]` is the index in the lower level of basis element `k`.
    images: Vec<Option<usize>>,
    target_dim: usize,
    field: Field,
}

impl ConnectingMap {
    pub fn by_labels(from: &StructAlgebra, to: &StructAlgebra) -> ConnectingMap {
        let images = from.labels().iter().map(|l| to.index_of(l)).collect();
        ConnectingMap { images, target_dim: to.dim(), field: to.field() }
    }

    pub fn image_of_basis(&self, k: usize) -> Option<usize> {
        self.images[k]
    }

    pub fn apply_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(&self.field, v.iter().filter_map(|(k, c)| self.images[*k].map(|t| (t, c.clone()))))
    }

    pub fn apply(&self, e: &Element) -> Element {
        Element::from_sparse(self.target_dim, self.apply_vec(e.coords()))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_dim];
        for t in self.images.iter().flatten() {
            hit[*t] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `pi(e_a e_b) = pi(e_a) pi(e_b)` for every pair of basis elements.
    pub fn is_homomorphism(&self, from: &StructAlgebra, to: &StructAlgebra) -> bool {
        (0..from.dim()).all(|a| {
            (0..from.dim()).all(|b| {
                let lhs = self.apply_vec(from.basis_product(a, b));
                let rhs = match (self.images[a], self.images[b]) {
                    (Some(x), Some(y)) => to.basis_product(x, y).clone(),
                    _ => SparseVec::new(),
                };
                lhs == rhs
            })
        })
    }
}

/// Levels `S_first <- ... <- S_last` of one family with their connecting maps.
#[derive(Debug, Clone)]
pub struct TruncatedTower {
    family: Family,
    field: Field,
    first: usize,
    levels: Vec<StructAlgebra>,
    /// `connecting[k]` maps level `first + k + 1` onto level `first + k`.
    connecting: Vec<ConnectingMap>,
}

impl TruncatedTower {
    /// Builds and validates levels `first..=last`: every connecting map must be
    /// a surjective homomorphism sending generators to generators.
    pub fn new(family: Family, field: Field, first: usize, last: usize, limits: &Limits) -> Result<Self, TowerError> {
        if first < family.min_level() {
            return Err(TowerError::LevelTooSmall { family, level: first, min: family.min_level() });
        }
        if last < first {
            return Err(TowerError::InvalidArgument(format!("empty level range {first}..={last}")));
        }
        if last > limits.max_level {
            return Err(TowerError::LevelCap { level: last, cap: limits.max_level });
        }
        let levels = (first..=last).map(|i| build_level(family, i, field, limits)).collect::<Result<Vec<_>, _>>()?;
        let mut connecting = Vec::new();
        for (k, pair) in levels.windows(2).enumerate() {
            let map = ConnectingMap::by_labels(&pair[1], &pair[0]);
            let gens_ok = family.generator_labels().iter().all(|g| {
                pair[1].index_of(g).and_then(|x| map.image_of_basis(x)) == pair[0].index_of(g)
            });
            if !gens_ok || !map.is_surjective() || !map.is_homomorphism(&pair[1], &pair[0]) {
                return Err(TowerError::BadConnectingMap(first + k + 1));
            }
            connecting.push(map);
        }
        Ok(TruncatedTower { family, field, first, levels, connecting })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn last(&self) -> usize {
        self.first + self.levels.len() - 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last()
    }

    pub fn algebra(&self, i: usize) -> Result<&StructAlgebra, TowerError> {
        i.checked_sub(self.first).and_then(|k| self.levels.get(k)).ok_or(TowerError::MissingLevel(i))
    }

    pub fn level(&self, i: usize) -> Result<Level<'_>, TowerError> {
        Level::new(self.family, i, self.algebra(i)?)
    }

    pub fn levels(&self) -> impl Iterator<Item = Level<'_>> {
        self.indices().map(|i| self.level(i).expect("index in range"))
    }

    /// The map `S_i -> S_{i-1}`.
    pub fn connecting(&self, i: usize) -> Result<&ConnectingMap, TowerError> {
        if i <= self.first {
            return Err(TowerError::MissingLevel(i.saturating_sub(1)));
        }
        self.connecting.get(i - self.first - 1).ok_or(TowerError::MissingLevel(i))
    }

    /// The composite `S_from -> S_to` applied to `e`.
    pub fn project(&self, e: &Element, from: usize, to: usize) -> Result<Element, TowerError> {
        if to > from {
            return Err(TowerError::InvalidArgument(format!("cannot project level {from} up to {to}")));
        }
        let mut cur = e.clone();
        for i in (to + 1..=from).rev() {
            cur = self.connecting(i)?.apply(&cur);
        }
        Ok(cur)
    }

    /// The generators `g_1, ..., g_r` in level `i`.
    pub fn generators(&self, i: usize) -> Result<Vec<Element>, TowerError> {
        self.level(i).map(|l| l.generators())
    }
}
