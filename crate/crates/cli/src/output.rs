use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Common, Format};

pub type CmdResult<T> = Result<T, Box<dyn std::error::Error>>;

/// Adds invocation metadata when requested. Off by default so that outputs
/// are byte-stable.
pub fn to_json(common: &Common, value: &impl Serialize) -> CmdResult<String> {
    let mut v = serde_json::to_value(value)?;
    if common.provenance {
        if let Value::Object(map) = &mut v {
            let seconds = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            map.insert(
                "provenance".to_string(),
                json!({
                    "tool": env!("CARGO_PKG_NAME"),
                    "version": env!("CARGO_PKG_VERSION"),
                    "args": std::env::args().skip(1).collect::<Vec<_>>(),
                    "unix_time": seconds,
                }),
            );
        }
    }
    let mut text = serde_json::to_string_pretty(&v)?;
    text.push('\n');
    Ok(text)
}

pub fn write_to(path: Option<&Path>, text: &str) -> CmdResult<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn emit(common: &Common, text: &str) -> CmdResult<()> {
    write_to(common.out.as_deref(), text)
}

/// JSON unless another supported format was asked for.
pub fn format_or_json(common: &Common, supported: &[Format]) -> CmdResult<Format> {
    match common.format {
        None => Ok(Format::Json),
        Some(f) if f == Format::Json || supported.contains(&f) => Ok(f),
        Some(f) => Err(format!("format {f:?} is not available for this command").into()),
    }
}
