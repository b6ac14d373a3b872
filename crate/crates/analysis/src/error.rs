use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("input is empty")]
    EmptyInput,

    #[error("need at least {needed} samples, got {got}")]
    InsufficientData { needed: u64, got: u64 },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    #[error("malformed PGM: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;
