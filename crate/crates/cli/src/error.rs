use thiserror::Error;

use owa_weights::OwaError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    MethodDomain(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl CliError {
    /// 0 ok, 2 usage, 3 method-domain, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::MethodDomain(_) => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

impl From<OwaError> for CliError {
    fn from(e: OwaError) -> Self {
        match e {
            OwaError::Unsupported { .. }
            | OwaError::Unstable { .. }
            | OwaError::Calibration { .. } => CliError::MethodDomain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
