//! Certificates: the deterministic text record of one step.
//!
//! ```text
//! step: notM24
//! verdict: verified
//! inputs:
//!   golay: sha256:...
//! checks:
//!   - PASS ...
//! witness:
//!   key: value
//!   list:
//!     - item
//! cited:
//!   - fact-id
//! notes:
//!   - text
//! digest: sha256:...
//! ```
//! The digest covers every byte above it. Wall time is never written here.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::StepId;
use crate::constants::sha256_hex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Verified,
    Failed,
    SkippedMissingData,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Failed => "failed",
            Verdict::SkippedMissingData => "skipped-missing-data",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Value(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub step: StepId,
    pub verdict: Verdict,
    pub inputs: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub witness: Vec<(String, Witness)>,
    pub cited: Vec<&'static str>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    pub fn witness(&self, key: &str) -> Option<&Witness> {
        self.witness.iter().find(|(k, _)| k == key).map(|(_, w)| w)
    }

    fn body(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "step: {}", self.step.as_str());
        let _ = writeln!(s, "verdict: {}", self.verdict.as_str());
        s.push_str("inputs:\n");
        for (k, h) in &self.inputs {
            let _ = writeln!(s, "  {k}: sha256:{h}");
        }
        s.push_str("checks:\n");
        for c in &self.checks {
            let _ = writeln!(s, "  - {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        }
        s.push_str("witness:\n");
        for (k, w) in &self.witness {
            match w {
                Witness::Value(v) => {
                    let _ = writeln!(s, "  {k}: {v}");
                }
                Witness::List(items) => {
                    let _ = writeln!(s, "  {k}:");
                    for it in items {
                        let _ = writeln!(s, "    - {it}");
                    }
                }
            }
        }
        s.push_str("cited:\n");
        for c in &self.cited {
            let _ = writeln!(s, "  - {c}");
        }
        s.push_str("notes:\n");
        for n in &self.notes {
            let _ = writeln!(s, "  - {n}");
        }
        s
    }

    pub fn render(&self) -> String {
        let mut s = self.body();
        let d = sha256_hex(s.as_bytes());
        let _ = writeln!(s, "digest: sha256:{d}");
        s
    }
}

/// Accumulates checks and witness data; the verdict is derived on `finish`.
pub struct Builder {
    cert: Certificate,
}

impl Builder {
    pub fn new(step: StepId) -> Self {
        Builder {
            cert: Certificate {
                step,
                verdict: Verdict::Failed,
                inputs: Vec::new(),
                checks: Vec::new(),
                witness: Vec::new(),
                cited: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    pub fn input(&mut self, name: &str, hash: String) -> &mut Self {
        self.cert.inputs.push((name.to_string(), hash));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.cert.checks.push(Check { name: name.into(), passed });
        passed
    }

    pub fn value(&mut self, key: &str, v: impl ToString) -> &mut Self {
        self.cert.witness.push((key.to_string(), Witness::Value(v.to_string())));
        self
    }

    pub fn list<I: IntoIterator<Item = S>, S: ToString>(&mut self, key: &str, items: I) -> &mut Self {
        self.cert.witness.push((key.to_string(), Witness::List(items.into_iter().map(|i| i.to_string()).collect())));
        self
    }

    pub fn cite(&mut self, id: &'static str) -> &mut Self {
        if !self.cert.cited.contains(&id) {
            self.cert.cited.push(id);
        }
        self
    }

    pub fn note(&mut self, n: impl Into<String>) -> &mut Self {
        self.cert.notes.push(n.into());
        self
    }

    /// Records a computation error as a failed check.
    pub fn error(&mut self, stage: &str, e: &crate::Error) {
        self.check(alloc::format!("{stage} completed"), false);
        self.note(alloc::format!("{stage}: {e}"));
    }

    pub fn finish(mut self) -> Certificate {
        self.cert.verdict =
            if !self.cert.checks.is_empty() && self.cert.checks.iter().all(|c| c.passed) { Verdict::Verified } else { Verdict::Failed };
        self.cert
    }

    pub fn skipped(mut self) -> Certificate {
        self.cert.verdict = Verdict::SkippedMissingData;
        self.cert
    }
}
