//! The `cwlab` command-line workbench: file formats, experiment presets and
//! the command tree around `cwlab-core`.

pub mod cli;
pub mod experiments;
pub mod formats;
pub mod report;

use std::fmt;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when an experiment assertion fails.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for usage and configuration errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, configuration or input files.
    Usage(String),
    Core(cwlab_core::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Json(e) => write!(f, "invalid JSON: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cwlab_core::Error> for CliError {
    fn from(e: cwlab_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}
