use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
