//! Finite-dimensional algebras given by structure constants: products of
//! subspaces, the lower filtration `A_(n)`, the derived series, and checking
//! whether a polynomial identity holds.

mod algebra;
pub mod builtin;
mod filtration;
mod format;
mod identity;

use thiserror::Error;

use crate::field::FieldError;
use crate::poly::PolyError;

pub use algebra::{subspace_product, Element, StructAlgebra, Subspace};
pub use filtration::{derived_series, is_nilpotent, is_solvable, lower_filtration, DerivedSeries, LowerFiltration};
pub use identity::{check_identity, evaluate, satisfies_identity, CheckStrategy, IdentityCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element has dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("subspace is not closed under multiplication")]
    NotSubalgebra,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("identity is not multihomogeneous")]
    NotHomogeneous,
    #[error("identity has degree {degree}, above the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("identity check is too large to decide: {0}")]
    Undecidable(String),
    #[error("{0} requires characteristic other than 2")]
    Characteristic2(&'static str),
    #[error("no value assigned to {0}")]
    Unassigned(String),
}
