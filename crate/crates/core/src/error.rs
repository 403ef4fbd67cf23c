use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs violate a mathematical precondition of the operation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("conductor mismatch at ({row}, {col}): expected {expected}, found {found}")]
    ConductorMismatch {
        row: usize,
        col: usize,
        expected: u64,
        found: u64,
    },

    /// An internal consistency check failed (e.g. a division that should
    /// have been exact was not).
    #[error("computation error: {0}")]
    Computation(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precondition(_) | Error::ConductorMismatch { .. })
    }
}
