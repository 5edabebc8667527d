use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::CliResult;

/// Writes `text` to `out`, or standard output.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Single-line JSON, used for the bulky table and matrix dumps.
pub fn to_json_compact<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}
