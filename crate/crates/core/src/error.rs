use thiserror::Error;

/// Errors produced by the cipher and its container format.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("trajectory diverged: state component became non-finite")]
    Divergence,

    #[error("password length {0} outside the schedulable range [3, 23]")]
    PasswordLength(usize),

    #[error("invalid dynamics parameters: {0}")]
    InvalidParams(&'static str),

    #[error("integrity check failed{}", chunk_suffix(*.chunk))]
    Integrity { chunk: Option<usize> },

    #[error("ciphertext too short: {0} bytes, at least 16 required")]
    Length(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("malformed envelope: {0}")]
    Format(String),

    #[error("envelope length mismatch: expected {expected} bytes, found {actual}")]
    Truncation { expected: u64, actual: u64 },
}

fn chunk_suffix(chunk: Option<usize>) -> String {
    match chunk {
        Some(idx) => format!(" in chunk {idx}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
