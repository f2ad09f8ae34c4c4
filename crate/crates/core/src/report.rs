//! Pass/fail records produced by the verification suites.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of one suite run. `elapsed_ms` is the only non-deterministic field.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub type_label: Option<String>,
    pub rank: Option<usize>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl SuiteReport {
    pub fn new(suite: &str, type_label: Option<char>, rank: Option<usize>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            type_label: type_label.map(|c| c.to_string()),
            rank,
            checks: Vec::new(),
            elapsed_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
        ok
    }

    pub fn error(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Error,
            detail: detail.into(),
        });
    }

    /// Record a check whose evaluation may itself fail.
    pub fn check_result<E: fmt::Display>(
        &mut self,
        name: impl Into<String>,
        outcome: std::result::Result<(bool, String), E>,
    ) -> bool {
        match outcome {
            Ok((ok, detail)) => self.check(name, ok, detail),
            Err(e) => {
                self.error(name, e.to_string());
                false
            }
        }
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status != Status::Pass).collect()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(t) = &self.type_label {
            write!(f, " type {t}")?;
        }
        if let Some(r) = self.rank {
            write!(f, " rank {r}")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            write!(f, "  [{tag}] {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
