//! Per-condition ledger entries shared by the diagnostics and certificates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The condition does not apply to this input.
    Vacuous,
    /// A numeric check landed inside its tolerance band.
    Indeterminate,
    /// Informational flag, never a pass or a failure.
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Indeterminate => "indeterminate",
            Verdict::Info => "info",
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        })
    }
}

/// One evaluated condition. Exact witnesses hold rational strings only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub mode: Mode,
    pub verdict: Verdict,
    pub witness: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tolerances: BTreeMap<String, f64>,
}

impl Check {
    pub fn exact(name: impl Into<String>, verdict: Verdict, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            mode: Mode::Exact,
            verdict,
            witness: witness.into(),
            tolerances: BTreeMap::new(),
        }
    }

    pub fn numeric(
        name: impl Into<String>,
        verdict: Verdict,
        witness: impl Into<String>,
        tolerances: &[(&str, f64)],
    ) -> Self {
        Check {
            name: name.into(),
            mode: Mode::Numeric,
            verdict,
            witness: witness.into(),
            tolerances: tolerances.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect(),
        }
    }
}

pub fn any_failed(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.verdict == Verdict::Fail)
}
