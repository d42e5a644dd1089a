//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {dim} (at most {max} is supported)")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("cone is not strongly convex: {0}")]
    NotStronglyConvex(String),

    #[error("not a fan: {0}")]
    NotAFan(String),

    #[error("not a morphism of fans: {0}")]
    NotAMorphism(String),

    #[error("{what} budget exceeded: needs {needed}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("{0} is not a prime power at most 64")]
    UnsupportedField(u64),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("value does not fit the enumeration range: {0}")]
    Overflow(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn budget(what: &'static str, needed: u128, limit: u128) -> Self {
        Error::BudgetExceeded {
            what,
            needed,
            limit,
        }
    }
}
