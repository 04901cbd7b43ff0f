use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Ingest { line: usize, message: String },
    #[error("inconsistent input: {0}")]
    Consistency(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("cannot compare: {0}")]
    Compare(String),
    #[error(transparent)]
    Core(#[from] seqtrans::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("every transform failed")]
    TotalFailure,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::TotalFailure => 3,
            _ => 2,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;
