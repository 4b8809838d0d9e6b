use thiserror::Error;

/// Failure modes shared by every engine operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no root system of type {series} with rank {rank}")]
    InvalidSystem { series: String, rank: usize },

    #[error("expected a weight with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not regular")]
    NotRegular(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("weight {0} is not a character of the Levi factor")]
    NotLeviCharacter(String),

    #[error("weight {0} has a denominator the integer kernel cannot represent")]
    Unrepresentable(String),

    #[error("{operation} exceeded the budget of {budget} weight instances")]
    BudgetExceeded { operation: &'static str, budget: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("cannot parse {0}")]
    Parse(String),

    #[error("character cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
