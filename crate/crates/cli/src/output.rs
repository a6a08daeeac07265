//! Report documents and their JSON/table renderings.

use std::fmt::Write as _;

use hopfcyc::report::{Check, Report as Checks};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Input {
  pub source: String,
  pub sha256: String,
}

impl Input {
  pub fn new(source: &str, bytes: &[u8]) -> Self { Input { source: source.to_string(), sha256: hex::encode(Sha256::digest(bytes)) } }
}

/// A row-labelled table of dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
  pub title: String,
  pub rows:  Vec<(String, Vec<String>)>,
}

impl Table {
  pub fn new(title: impl Into<String>) -> Self { Table { title: title.into(), rows: Vec::new() } }

  pub fn row<T: ToString>(mut self, label: impl Into<String>, values: &[T]) -> Self {
    self.rows.push((label.into(), values.iter().map(ToString::to_string).collect()));
    self
  }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
  pub parse_ms:   f64,
  pub compute_ms: f64,
}

/// Everything a command emits. `timings` is the only nondeterministic part
/// and is rendered last.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
  pub schema:  u32,
  pub command: Vec<String>,
  pub config:  Value,
  pub inputs:  Vec<Input>,
  pub passed:  bool,
  pub checks:  Vec<Check>,
  pub results: Value,
  #[serde(skip)]
  pub tables:  Vec<Table>,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub timings: Option<Timings>,
}

impl Report {
  pub fn new(command: Vec<String>, config: Value, inputs: Vec<Input>, checks: Checks, results: Value, tables: Vec<Table>) -> Self {
    Report { schema: SCHEMA, command, config, inputs, passed: checks.all_passed(), checks: checks.checks, results, tables, timings: None }
  }

  pub fn to_json(&self) -> String { serde_json::to_string_pretty(self).expect("reports serialize") }

  pub fn to_table(&self) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", self.command.join(" "));
    for i in &self.inputs {
      let _ = writeln!(out, "input:   {} (sha256 {})", i.source, &i.sha256[..16]);
    }
    for t in &self.tables {
      let _ = writeln!(out, "\n{}", t.title);
      let width = t.rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0).max(1);
      let cols = t.rows.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
      let cell = t.rows.iter().flat_map(|(_, v)| v.iter().map(|s| s.chars().count())).max().unwrap_or(1).max(2);
      let header: String = (0..cols).map(|n| format!(" {:>cell$}", n)).collect();
      let _ = writeln!(out, "  {:<width$} |{header}", "n");
      for (label, values) in &t.rows {
        let body: String = values.iter().map(|v| format!(" {:>cell$}", v)).collect();
        let _ = writeln!(out, "  {:<width$} |{body}", label);
      }
    }
    if !self.checks.is_empty() {
      let _ = writeln!(out, "\nchecks:");
      for c in &self.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        match &c.witness {
          Some(w) if !c.passed => {
            let _ = writeln!(out, "  [{mark}] {}: {w}", c.name);
          },
          _ => {
            let _ = writeln!(out, "  [{mark}] {}", c.name);
          },
        }
      }
    }
    let _ = writeln!(out, "\nresult: {}", if self.passed { "pass" } else { "FAIL" });
    if let Some(t) = &self.timings {
      let _ = writeln!(out, "timings: parse {:.1} ms, compute {:.1} ms", t.parse_ms, t.compute_ms);
    }
    out
  }
}
