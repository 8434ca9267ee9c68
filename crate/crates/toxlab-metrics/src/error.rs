use thiserror::Error;

/// Errors from metric computation and type construction.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MetricsError {
    /// An argument violated a precondition (range, ordering, emptiness).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation required a non-empty evaluation set.
    #[error("empty evaluation set: {0}")]
    EmptySet(String),
}
