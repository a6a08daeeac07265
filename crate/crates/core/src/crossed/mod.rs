//! Modular crossed modules: left module, right comodule, crossed condition
//! `ρ(hm) = Σ h_(2)m_(0) ⊗ h_(3)m_(1)S(h_(1))` and modularity
//! `Σ m_(1)m_(0) = m`.

mod constructors;
mod filtration;
mod group;
mod module;

pub use constructors::{
  adjoint, adjunction_unit_report, coadjoint, cofree, free, from_yetter_drinfeld, gh, hg, induce, induce_with_quotient,
  modular_pair_module, one_dimensional, restrict, sign, sign_character, to_yetter_drinfeld, trivial, ModularPairReport,
  YetterDrinfeld,
};
pub use filtration::{associated_graded, coinvariants_filtration, filtration_report, Filtration};
pub use group::{decompose_group_case, GroupDecomposition, GroupSummand};
pub use module::CrossedModule;

use thiserror::Error;

use crate::hopf::HopfError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedError {
  #[error("dimension mismatch: {0}")]
  Dimension(String),
  #[error("not a crossed module: {0}")]
  NotCrossed(String),
  #[error("crossed module is not modular: {0}")]
  NotModular(String),
  #[error("subspace not stable: {0}")]
  NotStable(String),
  #[error("base Hopf algebra is not a group algebra")]
  NotGroupAlgebra,
  #[error("antipode is not involutive (S² ≠ Id)")]
  NotInvolutive,
  #[error("element is not group-like")]
  NotGroupLike,
  #[error("functional is not an algebra character")]
  NotCharacter,
  #[error("hypothesis violated: {0}")]
  Hypothesis(String),
  #[error("degenerate construction: {0}")]
  Degenerate(String),
  #[error(transparent)]
  Hopf(#[from] HopfError),
  #[error(transparent)]
  Linalg(#[from] LinalgError),
}
