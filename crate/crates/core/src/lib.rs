//! Exact construction and analysis of quadratic Lie algebras: Lie algebras
//! carrying a symmetric, invariant, nondegenerate bilinear form.
//!
//! All arithmetic is over the rationals. The crate is organized bottom-up:
//!
//! * [`linalg`]: rational matrices, canonical subspaces, pencil determinants.
//! * [`lie`]: structure constants, series, radicals, structural predicates.
//! * [`forms`]: invariant forms, metrizability, orthogonality patterns, duality.
//! * [`constructions`]: the concrete families and the T*- and double extensions.
//! * [`derivations`]: derivations, inner derivations, skew derivations.
//! * [`analysis`]: locality, classification of local quadratic algebras,
//!   DOT diagrams and the text file format.

pub mod analysis;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod sampling;

pub use error::{Error, Result};
pub use forms::{BilinearForm, QuadraticAlgebra};
pub use lie::{LieAlgebra, LieAlgebraBuilder, TypePair};
pub use linalg::{Matrix, Scalar, Subspace};
