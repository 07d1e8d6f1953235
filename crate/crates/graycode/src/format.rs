//! Listing file formats.
//!
//! * lines: one entry per line, in listing order, `\n`-terminated.
//! * json: a single object `{"n": .., "variant": .., "entries": [..]}` with
//!   every entry as a string.
//!
//! Binary entries are words over `0`/`1` with position 1 leftmost.
//! Permutation entries are space-separated integers; digit strings are also
//! accepted on input for sizes up to 9. Variant tags are `cycle`, `path`,
//! `perm-cycle` and `perm-path`.

use std::fmt::Display;
use std::io::Write;

use clap::ValueEnum;
use graycode_core::{Listing, Permutation, Variant};
use serde::{Deserialize, Serialize};

use crate::{AppError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Lines,
    Json,
}

/// Structured form of a listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListingDoc {
    pub n: usize,
    pub variant: String,
    pub entries: Vec<String>,
}

pub fn binary_tag(variant: Variant) -> &'static str {
    match variant {
        Variant::Cycle => "cycle",
        Variant::Path => "path",
    }
}

pub fn perm_tag(variant: Variant) -> &'static str {
    match variant {
        Variant::Cycle => "perm-cycle",
        Variant::Path => "perm-path",
    }
}

/// Writes entries as they are produced, without collecting them first.
pub fn write_entries<W, T, I>(out: &mut W, format: Format, n: usize, tag: &str, entries: I) -> Result<()>
where
    W: Write,
    T: Display,
    I: IntoIterator<Item = T>,
{
    match format {
        Format::Lines => {
            for entry in entries {
                writeln!(out, "{entry}")?;
            }
        }
        Format::Json => {
            write!(out, "{{\"n\":{n},\"variant\":{},\"entries\":[", serde_json::to_string(tag)?)?;
            for (i, entry) in entries.into_iter().enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                serde_json::to_writer(&mut *out, &entry.to_string())?;
            }
            out.write_all(b"]}\n")?;
        }
    }
    Ok(())
}

/// Entries of a lines- or JSON-formatted document, plus the JSON variant tag
/// when present. Blank lines are skipped.
pub fn read_entries(text: &str) -> Result<(Vec<String>, Option<String>)> {
    if text.trim_start().starts_with('{') {
        let doc: ListingDoc = serde_json::from_str(text)?;
        return Ok((doc.entries, Some(doc.variant)));
    }
    let entries = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
    Ok((entries, None))
}

pub fn parse_binary_listing(entries: &[String]) -> Result<Listing> {
    let first = entries.first().ok_or_else(|| AppError::Input("empty listing".into()))?;
    let words = entries.iter().map(|e| e.parse()).collect::<graycode_core::Result<Vec<_>>>()?;
    let width = first.len();
    Ok(Listing::from_words(width, words)?)
}

pub fn parse_perm_listing(entries: &[String]) -> Result<Vec<Permutation>> {
    if entries.is_empty() {
        return Err(AppError::Input("empty listing".into()));
    }
    Ok(entries.iter().map(|e| e.parse()).collect::<graycode_core::Result<Vec<_>>>()?)
}
