//! Lie algebras as structure-constant tensors, with their characteristic
//! ideals, series and radicals.

mod algebra;
mod structure;

pub use algebra::{Diagnostic, LieAlgebra, LieAlgebraBuilder, Sparse};
pub use structure::{SeriesReport, TypePair};
