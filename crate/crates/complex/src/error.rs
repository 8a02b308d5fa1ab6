use algebra_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("d∘d is nonzero starting in degree {0}")]
    NotAComplex(i32),
    #[error("map does not commute with the differentials in degree {0}")]
    NotAChainMap(i32),
    #[error("tensor of non-free components in bidegree ({0}, {1}); resolve one factor first")]
    NonFreeTensor(i32, i32),
    #[error("component in degree {0} is not free")]
    NotFree(i32),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
