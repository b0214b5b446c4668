use serde::{Deserialize, Serialize};
use std::fmt::Display;

/// One named identity checked at one index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub n: usize,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// Serializes as a bare JSON list of entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `expected == got`.
    pub fn compare<T: PartialEq + Display>(&mut self, check: &str, n: usize, expected: T, got: T) {
        let pass = expected == got;
        self.record(check, n, expected.to_string(), got.to_string(), pass);
    }

    pub fn record(&mut self, check: &str, n: usize, expected: String, got: String, pass: bool) {
        self.entries.push(CheckEntry {
            check: check.to_string(),
            n,
            expected,
            got,
            pass,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
