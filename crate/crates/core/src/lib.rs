//! Exact cohomology and formality for nilpotent Lie algebras with complex structures.
//!
//! The crate computes, entirely over ℚ and ℚ(i):
//!
//! - Chevalley–Eilenberg (de Rham) cohomology of a nilpotent Lie algebra,
//! - Dolbeault cohomology `H^{p,q}_∂̄` for an invariant complex structure,
//! - cup products, the Poincaré pairing and the `∂∂̄`-lemma,
//! - triple Massey products with their indeterminacy,
//! - formality verdicts for the de Rham, Dolbeault and `(0,*)`-Dolbeault algebras.
//!
//! See `examples/` for one runnable program per capability.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod formality;
pub mod io;
pub mod linalg;
pub mod scalar;

pub use algebra::{ComplexStructure, LieAlgebra, StructureConstants};
pub use error::Error;
pub use exterior::{BasisKind, Differential, Form};
pub use scalar::{GaussianRational, Rational};
