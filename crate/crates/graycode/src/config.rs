//! Runtime configuration read from the environment.

use graycode_core::DEFAULT_ORACLE_CAP;

use crate::{AppError, Result};

/// Overrides the word-length cap of the breadth-first distance oracle.
pub const ORACLE_CAP_VAR: &str = "GRAYCODE_ORACLE_CAP";

/// Largest word length generated without `--force`.
pub const GENERATION_LIMIT: usize = 28;

pub fn oracle_cap() -> Result<usize> {
    parse_oracle_cap(std::env::var(ORACLE_CAP_VAR).ok().as_deref())
}

pub fn parse_oracle_cap(value: Option<&str>) -> Result<usize> {
    match value.map(str::trim) {
        None | Some("") => Ok(DEFAULT_ORACLE_CAP),
        Some(v) => v
            .parse::<usize>()
            .map_err(|_| AppError::Input(format!("{ORACLE_CAP_VAR} must be a non-negative integer, got {v:?}"))),
    }
}
