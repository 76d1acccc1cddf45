//! Varieties given by multihomogeneous identities: degree-bounded T-ideal
//! components, separativity witnesses, and the separation rewriters.

mod presentation;
mod rewrite;
mod tideal;
mod witness;

use thiserror::Error;

use crate::field::FieldError;
use crate::monomial::MonomialError;
use crate::poly::PolyError;

pub use presentation::{builtin_presentation, VarietyPresentation, BUILTIN_NAMES};
pub use rewrite::{separate_n, separate_once, Rewriter};
pub use tideal::{is_congruent, t_ideal_component, Congruence, TIdealComponent};
pub use witness::{
    derive_jordan_witness, is_split_form, jordan_multilinear_identity, search_witness, verify_witness,
    CertificateCheck, SeparativityWitness, Side, WitnessReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("identity {0} is not homogeneous; only homogeneous identities are supported")]
    NotHomogeneous(String),
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("presentation {0} has no separativity witness")]
    NoWitness(String),
    #[error("witness has no certificate for {shape} {side}")]
    MissingCertificate { shape: String, side: Side },
    #[error("unknown presentation {0:?}")]
    UnknownPresentation(String),
    #[error("{0} requires characteristic other than 2")]
    Characteristic2(&'static str),
    #[error("rewriting did not terminate within {0} steps; the witness is not decreasing")]
    RewriteDiverged(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    InvalidInput(String),
}
