use thiserror::Error;

/// Errors raised by the exact analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid fraction: zero denominator")]
    ZeroDenominator,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("index {index} is undefined here (requires n >= {min})")]
    UndefinedIndex { index: usize, min: usize },

    #[error("row {0} is not present in the table")]
    MissingRow(usize),

    #[error("c must be a positive integer")]
    NonPositiveC,

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series has nonzero constant term; exp is not defined formally")]
    NonzeroConstantTerm,

    #[error("series order {order} is too small (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },

    #[error("initial condition violated: {0}")]
    InitialCondition(String),

    #[error("coefficient {index} times {index}! is not an integer: series and sequence disagree")]
    NonIntegralCoefficient { index: usize },

    #[error("need coefficients up to index {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("{value} exceeds the factorization limit {limit}; raise the limit")]
    FactorizationLimit { value: u64, limit: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid power product: {0}")]
    InvalidPowerProduct(String),

    #[error("no crossover found for n <= {limit}")]
    ScanExhausted { limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
