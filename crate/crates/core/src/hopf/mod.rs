//! Finite-dimensional Hopf algebras as structure constants, finite groups,
//! Hopf subalgebras and quotients.

mod algebra;
mod group;
mod subalgebra;

pub use algebra::{
  expand, flat_index, multi_index, normalize, tensor_to_vec, vec_to_tensor, DiagonalAction, HopfAlgebra, Tensor,
};
pub use group::{permutation_sign, ClassData, FiniteGroup};
pub use subalgebra::{check_hopf_map, quotient_by_normal, HopfSubalgebra, QuotientHopf};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
  #[error("invalid group: {0}")]
  InvalidGroup(String),
  #[error("dimension mismatch: {0}")]
  Dimension(String),
  #[error("Hopf axiom violated: {0}")]
  Axiom(String),
  #[error("not a Hopf subalgebra: {0}")]
  NotSubalgebra(String),
  #[error("Hopf subalgebra is not normal: {0}")]
  NotNormal(String),
}
