use crate::words::Word;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed user input: bad type string, letter out of range, ...
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A word longer than the table's length bound was requested.
    #[error("length bound exceeded: need length {required}, table bound is {max_len}")]
    BoundExceeded { required: usize, max_len: usize },
    /// The integrality condition fails; carries the first offending pair.
    #[error("integrality condition fails at pair ({l1}, {l2}): coefficient {witness} of {word}")]
    IcViolation { l1: Word, l2: Word, word: Word, witness: String },
    #[error("operation requires the {required} relation preset")]
    UnsupportedPreset { required: &'static str },
    /// Internal consistency check failed (dimension certificate, theorem checks).
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
