//! Pass/fail records shared by all verifiers.

use serde::Serialize;

/// One named check with an optional witness describing the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
  pub name:    String,
  pub passed:  bool,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub witness: Option<String>,
}

impl Check {
  pub fn pass(name: impl Into<String>) -> Self { Check { name: name.into(), passed: true, witness: None } }

  pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
    Check { name: name.into(), passed: false, witness: Some(witness.into()) }
  }

  /// `pass` when `witness` is `None`.
  pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
    match witness {
      None => Self::pass(name),
      Some(w) => Self::fail(name, w),
    }
  }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
  pub checks: Vec<Check>,
}

impl Report {
  pub fn new() -> Self { Report { checks: Vec::new() } }

  pub fn push(&mut self, c: Check) { self.checks.push(c); }

  pub fn extend(&mut self, other: Report) { self.checks.extend(other.checks); }

  pub fn all_passed(&self) -> bool { self.checks.iter().all(|c| c.passed) }

  pub fn failures(&self) -> impl Iterator<Item = &Check> { self.checks.iter().filter(|c| !c.passed) }

  pub fn get(&self, name: &str) -> Option<&Check> { self.checks.iter().find(|c| c.name == name) }

  pub fn passed(&self, name: &str) -> bool { self.get(name).is_some_and(|c| c.passed) }

  /// Names prefixed, e.g. when nesting reports.
  pub fn prefixed(self, prefix: &str) -> Report {
    Report {
      checks: self.checks.into_iter().map(|c| Check { name: format!("{prefix}.{}", c.name), ..c }).collect(),
    }
  }
}

impl FromIterator<Check> for Report {
  fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self { Report { checks: iter.into_iter().collect() } }
}
