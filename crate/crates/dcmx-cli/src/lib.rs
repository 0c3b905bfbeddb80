//! Library backing the `dcmx` command-line tool.
//!
//! The binary is a thin argument-parsing shell; everything testable lives
//! here: the on-disk matrix format, PGM image codec, 2-D DFT helpers,
//! report formatting, golden-example verification, and the image
//! compression pipeline.

pub mod dcmx_file;
pub mod dft;
pub mod pgm;
pub mod pipeline;
pub mod report;
pub mod verify;

/// Errors surfaced by the command-line tool.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Underlying linear-algebra failure.
    #[error(transparent)]
    Core(#[from] dcmx::Error),
    /// I/O failure reading or writing a file.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Malformed input data (matrix file, image, or numeric field).
    #[error("invalid data in {path}: {message}")]
    Data { path: String, message: String },
    /// A golden-example check did not reproduce the expected values.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// I/O error tagged with the offending path.
    pub fn io(path: &str, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            source,
        }
    }

    /// Malformed-data error tagged with its source.
    pub fn data(path: &str, message: impl Into<String>) -> Self {
        CliError::Data {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

/// Result alias for CLI operations.
pub type CliResult<T> = Result<T, CliError>;
