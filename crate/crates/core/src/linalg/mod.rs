//! Exact rational linear algebra and subspace calculus.

mod echelon;
mod matrix;
pub mod pencil;
pub mod scalar;
mod subspace;

pub use echelon::{to_dense, to_sparse, Echelon, SparseRow};
pub use matrix::Matrix;
pub use pencil::{det_pencil, pencil_nonzero_test, PencilVerdict, Polynomial, ZeroProof};
pub use scalar::{frac, int, parse_scalar, format_scalar, Scalar, Vector};
pub use subspace::Subspace;

/// Reduced row-echelon form of `m`.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

/// Null space of `m`.
pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}
