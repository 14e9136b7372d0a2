use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("not a quadratic Lie algebra: {0}")]
    NotQuadratic(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),

    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
