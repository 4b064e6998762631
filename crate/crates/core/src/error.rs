use alloc::string::String;

/// Failure modes of the evaluators.
///
/// Numerical trouble (slow convergence, cancellation) is *not* an error: it
/// is reported through [`Flags`](crate::Flags) on the outcome.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{func}: domain error: {reason}")]
    Domain { func: &'static str, reason: String },
    #[error("{func}: index {n} is beyond the supported maximum {max}")]
    Unsupported { func: &'static str, n: u64, max: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain { func, reason: reason.into() }
    }

    /// Re-tag a domain error with the caller's name, keeping the reason.
    pub(crate) fn within(self, func: &'static str, what: &str) -> Self {
        match self {
            Error::Domain { func: inner, reason } => {
                Error::Domain { func, reason: alloc::format!("{what}: {inner}: {reason}") }
            }
            other => other,
        }
    }
}
