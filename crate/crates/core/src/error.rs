use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),

    #[error("index {index:?} out of range for dims {dims:?}")]
    IndexOutOfRange { index: Vec<usize>, dims: Vec<usize> },

    #[error("flat offset {offset} out of range (size {size})")]
    OffsetOutOfRange { offset: usize, size: usize },

    #[error("duplicate amplitude index {0:?}")]
    DuplicateIndex(Vec<usize>),

    #[error("all amplitudes are zero")]
    ZeroVector,

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("non-finite amplitude at flat offset {0}")]
    NonFinite(usize),

    #[error("dimension mismatch: expected {expected:?}, got {found:?}")]
    DimensionMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("expected {expected} subsystems, got {found}")]
    Arity { expected: String, found: usize },

    #[error("invalid subsystem pair ({i}, {j}) for {m} subsystems")]
    InvalidPair { i: usize, j: usize, m: usize },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state too large for dense evaluation ({size} > {limit} amplitudes)")]
    ScaleGuard { size: usize, limit: usize },

    #[error("expectation value is not real: {re} + {im}i")]
    NonRealExpectation { re: f64, im: f64 },

    #[error("expectation value is negative: {0}")]
    NegativeExpectation(f64),
}
