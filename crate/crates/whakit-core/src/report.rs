//! Structured pass/fail records with first-failure witnesses.

use std::fmt;

use rayon::prelude::*;

use crate::linalg::SVec;
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// A failure of the input data.
    Axiom,
    /// A failure of an identity that follows from already-passed checks,
    /// which points at a bug in the contraction code.
    Internal,
}

/// The first failing basis tuple of a check, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(indices: Vec<usize>, labels: Vec<String>, lhs: String, rhs: String) -> Self {
        Witness { indices, labels, lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub severity: Severity,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: true, witness: None, severity: Severity::Axiom, note: None }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            severity: Severity::Axiom,
            note: None,
        }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => CheckResult::pass(name),
            Some(w) => CheckResult::fail(name, w),
        }
    }

    /// A pass/fail outcome with no basis tuple attached (a structural fact,
    /// e.g. a dimension count); `detail` explains a failure.
    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, Witness::new(vec![], vec![], detail(), String::new()))
        }
    }

    pub fn internal(mut self) -> Self {
        self.severity = Severity::Internal;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// An ordered list of checks plus informational flags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<CheckResult>,
    pub flags: Vec<(String, bool)>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport { title: title.into(), checks: Vec::new(), flags: Vec::new() }
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn flag(&mut self, name: impl Into<String>, value: bool) {
        self.flags.push((name.into(), value));
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, other: VerificationReport) {
        let prefix = other.title.clone();
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
        for (n, v) in other.flags {
            let n = if prefix.is_empty() { n } else { format!("{prefix}: {n}") };
            self.flags.push((n, v));
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn flag_value(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  [{mark}] {}", c.name)?;
            if c.severity == Severity::Internal && !c.passed {
                write!(f, " (SEVERITY=internal)")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                if !w.labels.is_empty() {
                    writeln!(f, "         witness: {}", w.labels.join(", "))?;
                }
                writeln!(f, "         lhs: {}", w.lhs)?;
                if !w.rhs.is_empty() {
                    writeln!(f, "         rhs: {}", w.rhs)?;
                }
            }
            if let Some(n) = &c.note {
                writeln!(f, "         note: {n}")?;
            }
        }
        for (n, v) in &self.flags {
            writeln!(f, "  [flag] {n} = {v}")?;
        }
        Ok(())
    }
}

/// Runs `f` over `0..count` in parallel and returns the witness of the
/// lowest failing index.
pub fn first_witness<G>(count: usize, f: G) -> Option<Witness>
where
    G: Fn(usize) -> Option<Witness> + Sync + Send,
{
    (0..count).into_par_iter().find_map_first(f)
}

/// Renders a sparse vector as a sum of labelled basis elements.
pub fn render_vec<F: Field>(v: &SVec<F>, label: impl Fn(usize) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in v.iter() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&label(i));
        } else {
            out.push_str(&format!("({c})*{}", label(i)));
        }
    }
    out
}

/// Labels for a flat index of a tensor power of a labelled basis.
pub fn tensor_label(labels: &[String], legs: usize, idx: usize) -> String {
    let d = labels.len();
    let mut parts = vec![String::new(); legs];
    let mut rest = idx;
    for k in (0..legs).rev() {
        parts[k] = labels[rest % d].clone();
        rest /= d;
    }
    parts.join("(x)")
}
