use std::io;
use std::path::PathBuf;

/// Exit code for usage and domain errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when the outage constraints cannot be met.
pub const EXIT_INFEASIBLE: i32 = 3;
/// Exit code for file-system failures.
pub const EXIT_IO: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] ansec_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        use ansec_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Model(E::Infeasible(_)) => EXIT_INFEASIBLE,
            CliError::Model(E::Domain { .. } | E::Unsupported { .. }) => EXIT_USAGE,
            CliError::Model(E::NonFinite { .. }) => 1,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
