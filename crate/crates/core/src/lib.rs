//! Separation rewriting for free nonassociative algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`monomial`]: bracketed monomials, submonomials, the separating predicates;
//! - [`poly`]: exact polynomials of the free nonassociative algebra;
//! - [`identities`]: variety presentations, degree-bounded T-ideal components,
//!   separativity witnesses and the separation rewriters;
//! - [`findim`]: finite-dimensional algebras by structure constants, the lower
//!   filtration `A_(n)`, the derived series and identity checking;
//! - [`tower`]: the `p, q_m, r_mn` counterexample tower and its variants,
//!   rank diagnostics and separation defects.

pub mod config;
pub mod field;
pub mod findim;
pub mod identities;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod tower;

pub use config::Limits;
pub use field::{Field, FieldError, Scalar};
pub use monomial::{Indeterminate, Monomial, MonomialError, Var};
pub use poly::{Multidegree, PolyError, Polynomial};
