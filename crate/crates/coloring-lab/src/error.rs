use thiserror::Error;

/// Errors produced by the lab.
///
/// Guards are hard errors by design: a refusal is always preferred over a
/// silently truncated (and therefore possibly wrong) answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// graph6 input could not be decoded; `offset` is the byte position.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A precondition on the inputs does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration guard refused the computation.
    #[error("guard exceeded for {what}: needs {needed}, limit {limit}")]
    Guard {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    /// Two routes that must agree disagreed; this signals an implementation bug.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
