use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("constant term is not invertible")]
    NonUnitConstantTerm,

    #[error("singular pivot in column {col}: {witness}")]
    SingularPivot { col: usize, witness: String },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("row tuple has {rows} entries but column tuple has {cols}")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("tuple must be strictly increasing: {0}")]
    NonIncreasingTuple(String),

    #[error("unsupported identity family: {0}")]
    UnsupportedFamily(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("retry budget exhausted after {0} attempts")]
    RetryBudgetExhausted(usize),

    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
