use std::fmt;

use super::{Family, TowerError};
use crate::field::{Field, Scalar};
use crate::findim::{Element, StructAlgebra};
use crate::linalg;

/// One level of a tower together with the family that fixes its basis layout.
#[derive(Debug, Clone, Copy)]
pub struct Level<'a> {
    family: Family,
    index: usize,
    algebra: &'a StructAlgebra,
}

/// Square matrix of `r`-coefficients (or `s`-coefficients for the
/// alternating variant), row `m - 1`, column `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    field: Field,
    rows: Vec<Vec<Scalar>>,
}

impl RMatrix {
    pub fn zero(field: Field, size: usize) -> RMatrix {
        RMatrix { field, rows: vec![vec![Scalar::default(); size]; size] }
    }

    /// `column * row`.
    pub fn outer(field: Field, column: &[Scalar], row: &[Scalar]) -> RMatrix {
        let rows = column.iter().map(|c| row.iter().map(|r| field.mul(c, r)).collect()).collect();
        RMatrix { field, rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, m: usize, n: usize) -> &Scalar {
        &self.rows[m][n]
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.field, &self.rows)
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        let f = self.field;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect())
            .collect();
        RMatrix { field: f, rows }
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| self.field.format_scalar(x)).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn expected_dim(family: Family, i: usize) -> usize {
    let k = i - 1;
    match family {
        Family::Pqr => 1 + k + k * k,
        Family::PqrComm => 1 + k + k * (k + 1) / 2,
        Family::PqrAlt => 1 + k + k * k.saturating_sub(1) / 2,
        Family::FreeAssoc { generators: r } => (1..=i as u32).map(|l| r.pow(l)).sum(),
    }
}

impl<'a> Level<'a> {
    /// Wraps an algebra built by the family's builder at level `index`.
    pub fn new(family: Family, index: usize, algebra: &'a StructAlgebra) -> Result<Self, TowerError> {
        if index < family.min_level() {
            return Err(TowerError::LevelTooSmall { family, level: index, min: family.min_level() });
        }
        let labels_ok = family.generator_labels().iter().all(|g| algebra.index_of(g).is_some());
        if !labels_ok || algebra.dim() != expected_dim(family, index) {
            return Err(TowerError::InvalidArgument(format!("this algebra is not level {index} of the {family} tower")));
        }
        Ok(Level { family, index, algebra })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn algebra(&self) -> &'a StructAlgebra {
        self.algebra
    }

    pub fn generators(&self) -> Vec<Element> {
        self.family.generator_labels().iter().map(|g| self.algebra.element(g).expect("generator label")).collect()
    }

    fn require_pqr(&self, what: &'static str) -> Result<usize, TowerError> {
        if self.family.is_pqr() {
            Ok(self.index - 1)
        } else {
            Err(TowerError::WrongFamily(what))
        }
    }

    fn check(&self, a: &Element) -> Result<(), TowerError> {
        if a.dim() != self.algebra.dim() {
            return Err(crate::findim::AlgebraError::DimensionMismatch { expected: self.algebra.dim(), found: a.dim() }.into());
        }
        Ok(())
    }

    fn coeff(&self, a: &Element, label: &str) -> Scalar {
        a.coord(self.algebra.index_of(label).expect("basis label"))
    }

    /// Coefficients of `q1, ..., q_{i-1}`.
    pub fn q_column(&self, a: &Element) -> Result<Vec<Scalar>, TowerError> {
        let k = self.require_pqr("the q-column")?;
        self.check(a)?;
        Ok((1..=k).map(|m| self.coeff(a, &format!("q{m}"))).collect())
    }

    /// The coefficient matrix of the top layer: `r_mn` for pqr, the raw
    /// symmetric matrix for the commutative variant (no doubling), and the
    /// antisymmetric matrix of `s_mn` for the alternating one.
    pub fn r_matrix(&self, a: &Element) -> Result<RMatrix, TowerError> {
        let k = self.require_pqr("the r-matrix")?;
        self.check(a)?;
        let field = self.algebra.field();
        let mut out = RMatrix::zero(field, k);
        for m in 1..=k {
            for n in 1..=k {
                out.rows[m - 1][n - 1] = match self.family {
                    Family::Pqr => self.coeff(a, &format!("r{m}_{n}")),
                    Family::PqrComm => self.coeff(a, &format!("r{}_{}", m.min(n), m.max(n))),
                    Family::PqrAlt if m < n => self.coeff(a, &format!("s{m}_{n}")),
                    Family::PqrAlt if m > n => field.neg(&self.coeff(a, &format!("s{n}_{m}"))),
                    _ => Scalar::default(),
                };
            }
        }
        Ok(out)
    }

    /// The commutative variant's matrix with its main diagonal doubled: for a
    /// product `ab` it equals `col(a) row(b) + col(b) row(a)`. Over
    /// characteristic 2 the diagonal is lost, so the bound it gives is weaker.
    pub fn doubled_diagonal_matrix(&self, a: &Element) -> Result<RMatrix, TowerError> {
        if self.family != Family::PqrComm {
            return Err(TowerError::WrongFamily("the doubled-diagonal matrix"));
        }
        let mut m = self.r_matrix(a)?;
        let f = self.algebra.field();
        for k in 0..m.size() {
            m.rows[k][k] = f.add(&m.rows[k][k], &m.rows[k][k]);
        }
        Ok(m)
    }

    /// Rank of the matrix the rank law is about: the `r`-matrix, the
    /// doubled-diagonal matrix (commutative), or the `s`-matrix (alternating).
    pub fn r_rank(&self, a: &Element) -> Result<usize, TowerError> {
        let m = match self.family {
            Family::PqrComm => self.doubled_diagonal_matrix(a)?,
            _ => self.r_matrix(a)?,
        };
        Ok(m.rank())
    }

    /// Fewest products whose sum could equal `a`: each product has rank at
    /// most 1 (pqr) or 2 (the variants), and rank is subadditive.
    pub fn min_products_lower_bound(&self, a: &Element) -> Result<usize, TowerError> {
        let rank = self.r_rank(a)?;
        Ok(match self.family {
            Family::Pqr => rank,
            _ => rank.div_ceil(2),
        })
    }

    /// `sum_m r_mm`; for the alternating variant, which has no diagonal,
    /// `s1_2 + s3_4 + ...` plays the same role.
    pub fn diagonal(&self) -> Result<Element, TowerError> {
        let k = self.require_pqr("the diagonal element")?;
        let labels: Vec<String> = match self.family {
            Family::PqrAlt => (1..=k / 2).map(|j| format!("s{}_{}", 2 * j - 1, 2 * j)).collect(),
            _ => (1..=k).map(|m| format!("r{m}_{m}")).collect(),
        };
        let terms: Vec<(i64, &str)> = labels.iter().map(|l| (1, l.as_str())).collect();
        Ok(self.algebra.combination(&terms))
    }
}

pub fn r_matrix(level: &Level<'_>, a: &Element) -> Result<RMatrix, TowerError> {
    level.r_matrix(a)
}

pub fn r_rank(level: &Level<'_>, a: &Element) -> Result<usize, TowerError> {
    level.r_rank(a)
}

pub fn min_products_lower_bound(level: &Level<'_>, a: &Element) -> Result<usize, TowerError> {
    level.min_products_lower_bound(a)
}
