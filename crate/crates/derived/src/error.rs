use algebra_core::AlgebraError;
use complex::ComplexError;
use telescope::TelescopeError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivedError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Telescope(#[from] TelescopeError),
    #[error("window insufficient: entry (k={k}, d={d}) does not stabilize by level {cap}")]
    WindowInsufficient { k: i32, d: i64, cap: usize },
    #[error("cohomological degree {k} lies below the validity floor {floor} of the chosen resolution")]
    OutsideValidity { k: i32, floor: i32 },
    #[error("graded regime required: {0}")]
    NotGraded(String),
    #[error("level cap must be at least {0}")]
    CapTooSmall(usize),
    #[error("{0} has no free resolution of length at most {1}")]
    ResolutionTruncated(String, usize),
    #[error("ring map: {0}")]
    RingMap(String),
}
