//! Hopf-cyclic homology over exact fields.
//!
//! The crate builds cyclic objects attached to finite-dimensional Hopf
//! algebras with coefficients in stable anti-Yetter–Drinfeld modules, and to
//! Hopf–Galois extensions, then computes their Hochschild and cyclic homology
//! with exact sparse linear algebra.

pub mod crossed;
pub mod cyclic;
pub mod field;
pub mod galois;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod qtorus;
pub mod report;

pub use crossed::CrossedModule;
pub use field::{Field, Fp, Q};
pub use hopf::{FiniteGroup, HopfAlgebra};

/// Hopf algebras over the rationals.
pub type HopfAlgebraQ = HopfAlgebra<Q>;

/// Crossed modules over the rationals.
pub type CrossedModuleQ = CrossedModule<Q>;
