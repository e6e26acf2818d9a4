//! Verification reports: a list of named checks with concrete witnesses for
//! every failure, plus summary flags.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Basis indices at which a check failed, and the values that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    pub indices: Vec<usize>,
}

impl Witness {
    pub fn new(indices: &[usize], detail: impl Into<String>) -> Witness {
        Witness { indices: indices.to_vec(), detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Tag of the statement being checked, e.g. `partial-action.iii`.
    pub citation: String,
    pub name: String,
    pub status: Status,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: BTreeMap<String, bool>,
    /// Computed quantities such as dimensions, in canonical text form.
    pub values: BTreeMap<String, String>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Records a check; `failure` is `None` when it passed.
    pub fn record(&mut self, name: &str, citation: &str, failure: Option<Witness>) {
        let status = if failure.is_some() { Status::Fail } else { Status::Pass };
        self.checks.push(Check { citation: citation.into(), name: name.into(), status, witness: failure });
    }

    pub fn pass(&mut self, name: &str, citation: &str) {
        self.record(name, citation, None);
    }

    pub fn fail(&mut self, name: &str, citation: &str, witness: Witness) {
        self.record(name, citation, Some(witness));
    }

    pub fn skip(&mut self, name: &str, citation: &str, reason: &str) {
        self.checks.push(Check {
            citation: citation.into(),
            name: name.into(),
            status: Status::Skipped,
            witness: Some(Witness::new(&[], reason)),
        });
    }

    /// Records a boolean check with a witness built lazily on failure.
    pub fn expect(&mut self, name: &str, citation: &str, ok: bool, witness: impl FnOnce() -> Witness) {
        self.record(name, citation, if ok { None } else { Some(witness()) });
    }

    pub fn flag(&mut self, key: &str, value: bool) {
        self.summary.insert(key.into(), value);
    }

    pub fn value(&mut self, key: &str, value: impl std::fmt::Display) {
        self.values.insert(key.into(), value.to_string());
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
        self.summary.extend(other.summary);
        self.values.extend(other.values);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name || c.name.ends_with(&format!(": {name}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let _ = writeln!(out, "[{tag}] {}  ({})", c.name, c.citation);
            if let Some(w) = &c.witness {
                if c.status != Status::Pass {
                    let _ = writeln!(out, "       at {:?}: {}", w.indices, w.detail);
                }
            }
        }
        for (k, v) in &self.values {
            let _ = writeln!(out, "{k} = {v}");
        }
        if !self.summary.is_empty() {
            let flags: Vec<String> = self.summary.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "summary: {}", flags.join(" "));
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }

    /// Machine-readable form with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value prints")
    }
}

/// First failing case of a predicate over index tuples, as a witness.
pub fn first_failure<I, F>(cases: I, mut check: F) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> Option<String>,
{
    for idx in cases {
        if let Some(detail) = check(&idx) {
            return Some(Witness { indices: idx, detail });
        }
    }
    None
}

pub fn pairs(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..m).map(move |j| vec![i, j]))
}

pub fn triples(n: usize, m: usize, l: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..m).flat_map(move |j| (0..l).map(move |k| vec![i, j, k])))
}

pub fn singles(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|i| vec![i])
}
