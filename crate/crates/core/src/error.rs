use thiserror::Error;

use crate::cartan::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed Cartan type `{0}`")]
    MalformedType(String),

    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("index {index} out of range (expected < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("{what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subset is not downward closed: {0}")]
    NotAnIdeal(String),

    #[error("ideal is not {side}-invariant under the parabolic subgroup")]
    NotInvariant { side: &'static str },

    /// A structural identity failed to hold. `theorem` names the statement.
    #[error("verification failed ({theorem}): {detail}")]
    Verification {
        theorem: &'static str,
        detail: String,
    },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn verification(theorem: &'static str, detail: impl Into<String>) -> Self {
        Error::Verification {
            theorem,
            detail: detail.into(),
        }
    }

    pub(crate) fn precondition(detail: impl Into<String>) -> Self {
        Error::Precondition(detail.into())
    }
}

/// Returns a verification error unless `cond` holds.
pub(crate) fn ensure(
    cond: bool,
    theorem: &'static str,
    detail: impl FnOnce() -> String,
) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::verification(theorem, detail()))
    }
}
