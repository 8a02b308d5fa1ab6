use algebra_core::AlgebraError;
use complex::ComplexError;
use derived::DerivedError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CechError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Derived(#[from] DerivedError),
    #[error("cochains live on different levels ({0} and {1})")]
    MismatchedLevels(usize, usize),
    #[error("cochains belong to different sequences")]
    MismatchedSequences,
    #[error("localized elements have different denominator bases")]
    MismatchedBases,
    #[error("level must be at least {0}")]
    LevelTooSmall(usize),
    #[error("cochain of degree {degree} needs {expected} values, got {got}")]
    CochainShape { degree: usize, expected: usize, got: usize },
}
