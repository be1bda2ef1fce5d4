//! Versioned JSON record of a command run.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use caforge_core::report::{Check, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// The input polynomial in both text forms when available.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputRecord {
    pub coeffs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factored: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub tool_version: String,
    pub command: String,
    pub arguments: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputRecord>,
    pub checks: Vec<Check>,
    pub results: serde_json::Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub timestamp: String,
}

impl Certificate {
    pub fn new(command: &str, arguments: BTreeMap<String, String>) -> Self {
        Certificate {
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            command: command.to_owned(),
            arguments,
            input: None,
            checks: Vec::new(),
            results: serde_json::Value::Null,
            notes: Vec::new(),
            timestamp: String::new(),
        }
    }

    pub fn stamp_now(&mut self) {
        self.timestamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    /// Pretty JSON with a trailing newline. Map keys are sorted, so
    /// parsing and re-serializing reproduces the same bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Writes to a temporary file next to `path`, then renames it into place.
    pub fn write_atomic(&self, path: &Path) -> std::io::Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(self.to_json().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}
