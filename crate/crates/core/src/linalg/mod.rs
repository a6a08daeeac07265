//! Exact sparse linear algebra: vectors and matrices over a [`Field`](crate::field::Field),
//! elimination, subspaces and quotients, chain complexes and bicomplexes, and
//! integer Smith normal form.

mod complex;
mod echelon;
mod smith;
mod sparse;

pub use complex::{quasi_iso_check, Bicomplex, ChainComplex, ChainMap, QuasiIsoDegree};
pub use echelon::{echelon_of, inverse, kernel, modular_rank, rank, rank_kernel, solve, Echelon, Quotient, Subspace, CERTIFICATE_PRIME};
pub use smith::{identity as int_identity, int_det, int_mul, smith_normal_form, IntMatrix, SmithForm};
pub use sparse::{SparseMatrix, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
  #[error("insufficient truncation: homology requested through degree {requested}, but the data only determines degrees up to {}", available.map_or("none".to_string(), |a| a.to_string()))]
  InsufficientTruncation { requested: usize, available: Option<usize> },
  #[error("dimension mismatch: {0}")]
  DimensionMismatch(String),
  #[error("differential squares to a nonzero map at degree {degree}")]
  NotAComplex { degree: usize },
  #[error("map does not commute with the differentials at degree {degree}")]
  NotAChainMap { degree: usize },
  #[error("integer overflow in exact integer arithmetic")]
  Overflow,
}
