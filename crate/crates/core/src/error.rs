use thiserror::Error;

pub type Result<T> = std::result::Result<T, YbeError>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum YbeError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not coprime: ({0}, {1})")]
    NotCoprime(usize, usize),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("not polynomial of stated degree {0}")]
    NotPolynomial(usize),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },
    #[error("coincident spectral parameters")]
    CoincidentPoints,
    #[error("no unique solution for {0}")]
    NotUnique(String),
    #[error("Frobenius form degenerate")]
    Degenerate,
    #[error("truncation: {0}")]
    Truncation(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series does not converge: {0}")]
    NonConvergent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
