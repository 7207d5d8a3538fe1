//! Exact linear algebra over the rationals.
//!
//! Every subspace is carried by its RREF-canonical basis (pivot entries 1,
//! pivots ascending, zero rows dropped), so equal subspaces have equal
//! bases and subspace equality is structural.

mod matrix;
mod rat;
mod vector;

pub use matrix::{orthogonal_complement, solve_affine, subspace_intersection, subspace_sum, QMat, Rref};
pub use rat::Rat;
pub use vector::QVec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRat(String),
    #[error("empty input")]
    EmptyInput,
}
