use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An enumeration would exceed its configured budget. The operation
    /// refuses instead of running open-ended.
    #[error("enumeration budget exceeded: needs {needed} units, budget is {budget}")]
    ResourceLimit { needed: u128, budget: u128 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("rank {rank} is below the stated dimension {dimension}")]
    RankDeficient { rank: usize, dimension: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("argument outside the function domain: {0}")]
    DomainError(String),

    #[error("root isolation failed: {0}")]
    NoRoot(String),

    #[error("no feasible value: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
