use crate::io::ValidationReport;

/// Errors shared across the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Malformed input text (table or permutation file).
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A multiplication table that fails the group axioms.
    #[error("group axioms violated:\n{0}")]
    InvalidGroup(ValidationReport),

    /// The caller broke an API precondition.
    #[error("{0}")]
    Usage(String),

    /// Input data is well-formed but outside the operation's domain.
    #[error("{0}")]
    Domain(String),

    /// A guard refused to start or continue an infeasible computation.
    #[error("{0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
