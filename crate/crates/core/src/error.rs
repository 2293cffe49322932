use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime characteristic")]
    NotPrime(u64),
    #[error("characteristic mismatch: {left} vs {right}")]
    CharacteristicMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("negative power {0} of a Laurent polynomial")]
    NegativePower(i64),
    #[error("variant index {index} out of range (expected < {len})")]
    VariantOutOfRange { index: usize, len: usize },
    #[error("malformed element: {0}")]
    Malformed(String),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search box is infeasible: estimated {estimate} candidates exceeds ceiling {ceiling}")]
    Infeasible { estimate: u128, ceiling: u128 },
    #[error("invalid search box: {0}")]
    InvalidBox(String),
    #[error("dense search kernel supports characteristics below 256, got {0}")]
    CharacteristicTooLarge(u32),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
}
