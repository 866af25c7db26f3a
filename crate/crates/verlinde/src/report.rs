//! Verification reports: one record per check, rendered as text or JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedInconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str, passed: bool, witness: Value) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn skipped(id: impl Into<String>, anchor: &str, witness: Value) -> Self {
        Check { id: id.into(), anchor: anchor.to_string(), status: Status::SkippedInconclusive, witness }
    }

    /// A failed check recording an error raised while computing it.
    pub fn error(id: impl Into<String>, anchor: &str, err: impl std::fmt::Display) -> Self {
        Check::new(id, anchor, false, serde_json::json!({ "error": err.to_string() }))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub params: Value,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub version: String,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str, params: Value, checks: Vec<Check>, elapsed_ms: u64) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::SkippedInconclusive => summary.skipped += 1,
            }
        }
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            params,
            checks,
            summary,
            version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_ms,
        }
    }

    /// Concatenate several suite reports under one name.
    pub fn merge(suite: &str, reports: Vec<VerificationReport>) -> Self {
        let elapsed_ms = reports.iter().map(|r| r.elapsed_ms).sum();
        let params = Value::Object(reports.iter().map(|r| (r.suite.clone(), r.params.clone())).collect());
        let checks = reports.into_iter().flat_map(|r| r.checks).collect();
        VerificationReport::new(suite, params, checks, elapsed_ms)
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// Human-readable rendering. Timing is left out so the text is
    /// identical across runs.
    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (schema {}, version {})", self.suite, self.schema_version, self.version);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::SkippedInconclusive => "skip",
            };
            if verbose || c.status != Status::Pass {
                let _ = writeln!(out, "  [{tag}] {} ({}) {}", c.id, c.anchor, c.witness);
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        );
        out
    }

    /// Markdown table of the checks.
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| check | anchor | status | witness |\n|---|---|---|---|\n");
        for c in &self.checks {
            let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_string));
            let _ = writeln!(
                out,
                "| {} | {} | {} | `{}` |",
                c.id,
                c.anchor,
                status.unwrap_or_default(),
                c.witness
            );
        }
        out
    }
}
