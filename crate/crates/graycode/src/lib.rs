//! Std companion to `graycode-core`: listing file formats, environment
//! configuration and the `graycode` command-line front end.

pub mod cli;
pub mod config;
pub mod format;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] graycode_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON listing: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, AppError>;
