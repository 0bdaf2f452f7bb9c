use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The search hit its step cap before reaching a decision. Never a
    /// refutation.
    #[error("search budget exhausted after {steps} steps")]
    BudgetExhausted { steps: u64 },

    #[error("search cancelled")]
    Cancelled,

    #[error("no such fan: {0}")]
    NoSuchFan(FanShortfall),

    /// A result that a proved theorem rules out. Always a bug in this crate.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

/// Which precondition of fan rerouting failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FanShortfall {
    #[error("only {found} of the {wanted} required targets can be reached by independent paths")]
    Required { found: usize, wanted: usize },
    #[error("at most {max} independent paths exist, {wanted} requested")]
    Total { max: usize, wanted: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
