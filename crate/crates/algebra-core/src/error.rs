use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator divisible by the characteristic {0}")]
    DenominatorDivisibleByP(u64),
    #[error("zero ring: the quotient ideal contains 1")]
    ZeroRing,
    #[error("generator {0} is not homogeneous for the given weights")]
    NonHomogeneous(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("weights must be positive and one per variable")]
    BadWeights,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not well defined: relation column {0} does not map into the target relations")]
    NotWellDefined(usize),
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("level cap {0} exceeded before stabilization")]
    LevelCapExceeded(usize),
    #[error("graded data required: {0}")]
    NotGraded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
