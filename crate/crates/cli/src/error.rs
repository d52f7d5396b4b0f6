use std::io;
use std::path::Path;

/// Failures surfaced by the command line. Each maps to a stable exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn io(path: impl AsRef<Path>, source: io::Error) -> CliError {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

impl From<ratsq_core::Error> for CliError {
    fn from(e: ratsq_core::Error) -> CliError {
        use ratsq_core::Error as E;
        match e {
            E::Precondition(_) | E::EmptyInterval | E::IndexOutOfRange { .. } => {
                CliError::Usage(e.to_string())
            }
            E::InfiniteSurd | E::NoKFound(_) => CliError::Internal(e.to_string()),
        }
    }
}
