//! Cyclic objects `Z̃_*(H)` and `Z_*(H,M)`, their identity suites, and
//! Hochschild/cyclic homology through the Hochschild complex, the Connes
//! complex and the Tsygan bicomplex.

mod bar;
mod hopf;
mod object;
mod comparisons;

pub use bar::{bar_complex, group_homology, tor_oracle};
pub use hopf::{build_aux_cyclic, build_cyclic, build_cyclic_for_homology, build_cyclic_unchecked, AuxSpec, HopfCyclicSpec};
pub use object::{CyclicObject, CyclicSpec, HomologyReport, Method, Operators};
pub use comparisons::{
  burghelea_finite, e1_page_report, fold_even, homology_of, is_separable, reduce_by_normal, sbi_check, semisimple_reduction,
  shapiro_check, tor_fold_check, BurghelaeReport, BurghelaeTerm, Comparison, ComparisonReport, E1Column, E1Page, ReducedModule,
};

use thiserror::Error;

use crate::crossed::CrossedError;
use crate::hopf::HopfError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
  #[error("cyclic homology needs characteristic 0; the Connes complex and the comparison checks are invalid over F_{0}")]
  PositiveCharacteristic(u64),
  #[error("hypothesis violated: {0}")]
  Hypothesis(String),
  #[error(transparent)]
  Crossed(#[from] CrossedError),
  #[error(transparent)]
  Hopf(#[from] HopfError),
  #[error(transparent)]
  Linalg(#[from] LinalgError),
}
