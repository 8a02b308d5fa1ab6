use complex::ComplexError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TelescopeError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("index tuple has {got} entries, the sequence has {expected}")]
    Arity { expected: usize, got: usize },
    #[error("truncation level {level} is below index {index}")]
    LevelTooSmall { level: usize, index: usize },
    #[error("levels must satisfy 1 ≤ j ≤ j' (got {0}, {1})")]
    BadLevels(usize, usize),
}
