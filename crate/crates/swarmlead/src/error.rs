//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Per-agent series that must share a tick range do not.
    #[error("trajectory alignment error: {0}")]
    Alignment(String),

    /// Not enough samples to run an operation; names the required minimum.
    #[error("insufficient data for {what}: need at least {required}, got {actual}")]
    InsufficientData {
        what: &'static str,
        required: usize,
        actual: usize,
    },

    /// Window extraction outside the series bounds.
    #[error("window [{start}, {start}+{len}) out of range for series of length {series_len}")]
    WindowRange {
        start: usize,
        len: usize,
        series_len: usize,
    },

    /// A row that does not parse; carries the 1-based line number.
    #[error("{path}:{line}: {msg}")]
    CsvParse {
        path: String,
        line: usize,
        msg: String,
    },

    /// A file that parses but violates the trajectory schema.
    #[error("{path}: schema error: {msg}")]
    CsvSchema { path: String, msg: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// An error from a component, wrapped with seed/method context.
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps the error with a context label (seed, method, file).
    pub fn with_context(self, context: impl Into<String>) -> Error {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// The innermost error, unwrapping context layers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
