use thiserror::Error;

/// Errors surfaced by exact computations and input ingestion.
///
/// `NonExactDivision` deserves a note: pivots in fraction-free elimination
/// always divide exactly, so seeing it from a determinant means the
/// elimination itself is broken. It aborts the computation; nothing is
/// ever rounded to make a division "work".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must be at least 2x2, got {rows}x{cols}")]
    TooSmall { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix entries must be constant polynomials")]
    NonConstantEntry,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad index sets: {0}")]
    BadIndexSets(String),
    #[error("insufficient terms: needed {needed}, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("sequence too short: needed {needed}, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("empty sequence")]
    EmptySequence,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown triangle `{0}`")]
    UnknownTriangle(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("negative q value: {0}")]
    NegativeQValue(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
