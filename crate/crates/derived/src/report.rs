//! Verification outcomes shared by the verifiers.

use std::fmt;

use crate::window::TableEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    Undetermined,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "not-applicable",
            Outcome::Undetermined => "undetermined",
        })
    }
}

/// One named sub-check with a short textual detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A graded table as recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedTable {
    pub name: String,
    pub rows: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub operation: String,
    pub outcome: Outcome,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
    /// Key/value certificate data (offsets, onset levels, caps).
    pub certificates: Vec<(String, String)>,
    pub tables: Vec<NamedTable>,
}

impl Report {
    pub fn new(operation: impl Into<String>) -> Self {
        Self {
            operation: operation.into(),
            outcome: Outcome::Pass,
            checks: Vec::new(),
            witnesses: Vec::new(),
            certificates: Vec::new(),
            tables: Vec::new(),
        }
    }

    /// Records a check; failing checks are also listed as witnesses.
    pub fn check(&mut self, c: Check) {
        if !c.passed {
            self.witnesses.push(format!("{}: {}", c.name, c.detail));
        }
        self.checks.push(c);
    }

    pub fn certificate(&mut self, key: impl Into<String>, value: impl ToString) {
        self.certificates.push((key.into(), value.to_string()));
    }

    /// Prepends the certificates of `other`.
    pub fn with_certificates(mut self, other: &Report) -> Self {
        let mut c = other.certificates.clone();
        c.append(&mut self.certificates);
        self.certificates = c;
        self
    }

    pub fn table(&mut self, name: impl Into<String>, rows: Vec<TableEntry>) {
        self.tables.push(NamedTable {
            name: name.into(),
            rows,
        });
    }

    /// Pass iff every check passed, unless the outcome was already set to
    /// something other than pass.
    pub fn finish(mut self) -> Self {
        if self.outcome == Outcome::Pass && self.checks.iter().any(|c| !c.passed) {
            self.outcome = Outcome::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
