//! File formats, report rendering and the `hyperlam` command line.

pub mod cli;
pub mod format;
pub mod number;
pub mod report;

pub use cli::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or input files; exit status 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hyperlam_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
