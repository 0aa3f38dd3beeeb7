use thiserror::Error;

/// Failures surfaced by the command line, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or malformed input files.
    #[error("{0}")]
    Usage(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A verified property failed, or the library reported a broken invariant.
    #[error("{0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<aldkit_core::Error> for CliError {
    fn from(e: aldkit_core::Error) -> CliError {
        use aldkit_core::Error as E;
        match e {
            E::LengthMismatch { .. } | E::InvalidParameter(_) | E::Uncorrectable => CliError::Usage(e.to_string()),
            E::BudgetExceeded(what) => CliError::Budget(what),
            E::SingularMatrix | E::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
