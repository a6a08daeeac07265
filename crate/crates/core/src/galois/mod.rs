//! Comodule algebras and Hopf–Galois extensions: coinvariants, the canonical
//! map `β` and `κ`, Ulbrich–Miyashita actions, `A_B` as a modular crossed
//! module, the relative cyclic object `Z_*(A/B, M)`, the isomorphism `λ_*`,
//! separable base change, graded constructions and trace maps.

mod algebra;
mod comodule;
mod extension;
mod relative;

pub use algebra::{Algebra, Bimodule};
pub use comodule::ComoduleAlgebra;
pub use extension::{galois_check, AbModule, GaloisExtension, UmActions};
pub use relative::{
  burghelea_graded, hc_both_ways, lambda_iso, relative_cyclic, separability_element, separable_base_change, trace_axioms,
  trace_map, GradedBurghelea, LambdaIso, RelativeCyclic, SeparableReport, TraceMap,
};

use thiserror::Error;

use crate::crossed::CrossedError;
use crate::cyclic::CyclicError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
  #[error("dimension mismatch: {0}")]
  Dimension(String),
  #[error("not associative: {0}")]
  NotAssociative(String),
  #[error("subspace is not a subalgebra")]
  NotSubalgebra,
  #[error("not a bimodule: {0}")]
  NotBimodule(String),
  #[error("not a comodule algebra: {0}")]
  NotComoduleAlgebra(String),
  #[error("invalid grading: {0}")]
  Grading(String),
  #[error("2-cocycle condition fails at {0}")]
  Cocycle(String),
  #[error("not Galois: β has rank {rank}, domain dimension {domain}, codomain dimension {codomain}")]
  NotGalois { rank: usize, domain: usize, codomain: usize },
  #[error("coaction does not descend to the commutator quotient: {0}")]
  CoactionNotInduced(String),
  #[error("not separable")]
  NotSeparable,
  #[error("trace axiom fails: {0}")]
  TraceAxiom(String),
  #[error("λ does not commute: {0}")]
  Commutation(String),
  #[error("internal consistency: {0}")]
  Internal(String),
  #[error(transparent)]
  Crossed(#[from] CrossedError),
  #[error(transparent)]
  Cyclic(#[from] CyclicError),
  #[error(transparent)]
  Linalg(#[from] LinalgError),
}
