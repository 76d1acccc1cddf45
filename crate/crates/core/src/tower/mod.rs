//! The `p, q_m, r_mn` counterexample tower, its commutative and alternating
//! variants, and truncated free nilpotent associative algebras as a separative
//! reference. The inverse limit is never built; every statement is checked at
//! explicit truncation levels.

mod build;
mod chain;
mod defect;
mod rank;
mod report;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::findim::AlgebraError;

pub use build::{build_free_nilpotent_assoc, build_pqr, build_pqr_alt, build_pqr_comm};
pub use chain::{ConnectingMap, TruncatedTower};
pub use defect::{
    filtration_codim_profile, level_codim, level_separation_defect, lower_length_span, separating_image,
    separating_image_enumerated, separation_defect, CodimEntry,
};
pub use rank::{min_products_lower_bound, r_matrix, r_rank, Level, RMatrix};
pub use report::{tower_report, LevelReport, ReportOptions, TowerReport};

#[derive(Debug, Error)]
pub enum TowerError {
    #[error("{family} levels start at {min}; got {level}")]
    LevelTooSmall { family: Family, level: usize, min: usize },
    #[error("level {level} exceeds the cap {cap}")]
    LevelCap { level: usize, cap: usize },
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("monomial length {length} exceeds the enumeration cap {cap}")]
    EnumerationCap { length: usize, cap: usize },
    #[error("{0} is not defined for this algebra family")]
    WrongFamily(&'static str),
    #[error("unknown tower family {0:?} (expected pqr, pqr-comm, pqr-alt or free-assoc)")]
    UnknownFamily(String),
    #[error("level {0} is not part of this tower")]
    MissingLevel(usize),
    #[error("the connecting map from level {0} is not a surjective homomorphism")]
    BadConnectingMap(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which tower a level belongs to. Level indices are the truncation
/// parameter: `i` for the pqr families, the nilpotency class `c` for the
/// free associative one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Pqr,
    PqrComm,
    PqrAlt,
    FreeAssoc { generators: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Pqr => "pqr",
            Family::PqrComm => "pqr-comm",
            Family::PqrAlt => "pqr-alt",
            Family::FreeAssoc { .. } => "free-assoc",
        }
    }

    pub fn min_level(&self) -> usize {
        match self {
            Family::FreeAssoc { .. } => 1,
            _ => 2,
        }
    }

    pub fn is_pqr(&self) -> bool {
        !matches!(self, Family::FreeAssoc { .. })
    }

    /// Labels of the generators `g_1, ..., g_r` of every level.
    pub fn generator_labels(&self) -> Vec<String> {
        match self {
            Family::Pqr | Family::PqrComm => vec!["p".into()],
            Family::PqrAlt => vec!["p".into(), "q1".into()],
            Family::FreeAssoc { generators } => (1..=*generators).map(|k| format!("g{k}")).collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::FreeAssoc { generators } => write!(f, "free-assoc(r={generators})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Parses `pqr`, `pqr-comm`, `pqr-alt`, `free-assoc` (two generators) or
/// `free-assoc:<r>`.
impl FromStr for Family {
    type Err = TowerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pqr" => Ok(Family::Pqr),
            "pqr-comm" => Ok(Family::PqrComm),
            "pqr-alt" => Ok(Family::PqrAlt),
            "free-assoc" => Ok(Family::FreeAssoc { generators: 2 }),
            _ => s
                .strip_prefix("free-assoc:")
                .and_then(|r| r.parse().ok())
                .filter(|r| *r >= 1)
                .map(|generators| Family::FreeAssoc { generators })
                .ok_or_else(|| TowerError::UnknownFamily(s.to_string())),
        }
    }
}
