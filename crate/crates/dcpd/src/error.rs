//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by decomposition, numerics, and I/O routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A file exists but its contents do not parse as the expected format.
    #[error("parse error: {0}")]
    Parse(String),

    /// Invalid arguments, shapes, or configuration.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A Gram matrix was singular beyond the ridge fallback.
    #[error("degenerate Gram matrix{0}")]
    DegenerateGram(String),

    /// An iterative kernel hit its iteration cap without converging.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// A combinatorial search would exceed its subset budget.
    #[error("combinatorial budget exceeded: {0}")]
    CombinatorialBudget(String),

    /// Other numerical failure (rank collapse, non-finite values, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Process exit code for the CLI: 1 i/o, 2 validation/model, 3 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Parse(_) => 1,
            Error::InvalidInput(_) | Error::CombinatorialBudget(_) => 2,
            Error::DegenerateGram(_) | Error::NonConvergence(_) | Error::Numerical(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
