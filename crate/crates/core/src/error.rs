use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("row length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// A closed form produced a sum that is not divisible by `k!`.
    #[error("inexact division by {divisor} in {context}")]
    InexactDivision { context: String, divisor: String },

    #[error("series domain violation: {0}")]
    SeriesDomain(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("parse error: {0}")]
    Parse(String),
}
