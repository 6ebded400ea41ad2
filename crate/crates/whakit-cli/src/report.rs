//! Run reports: the JSON record of one CLI invocation.

use serde::{Deserialize, Serialize};
use whakit_core::report::{CheckResult, Severity, VerificationReport};

use crate::catalog::InputDigest;

pub const TOOL: &str = "whakit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub severity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub title: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
    pub flags: Vec<(String, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputJson {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub report: String,
    pub check: CheckJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingJson {
    pub report: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub seed: u64,
    pub inputs: Vec<InputJson>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub reports: Vec<ReportJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingJson>>,
}

impl From<&CheckResult> for CheckJson {
    fn from(c: &CheckResult) -> Self {
        CheckJson {
            name: c.name.clone(),
            passed: c.passed,
            severity: match c.severity {
                Severity::Axiom => "axiom".into(),
                Severity::Internal => "internal".into(),
            },
            witness: c.witness.as_ref().map(|w| WitnessJson {
                indices: w.indices.clone(),
                labels: w.labels.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
            }),
            note: c.note.clone(),
        }
    }
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            title: r.title.clone(),
            passed: r.passed(),
            checks: r.checks.iter().map(CheckJson::from).collect(),
            flags: r.flags.clone(),
        }
    }
}

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        RunReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command,
            seed,
            inputs: Vec::new(),
            passed: true,
            first_failure: None,
            error: None,
            reports: Vec::new(),
            timings: None,
        }
    }

    pub fn add_input(&mut self, d: InputDigest) {
        self.inputs.push(InputJson { source: d.source, sha256: d.sha256 });
    }

    /// Appends a report in call order, so the result does not depend on how
    /// the checks were scheduled.
    pub fn add(&mut self, r: &VerificationReport, millis: Option<u64>) {
        if self.first_failure.is_none() {
            if let Some(c) = r.first_failure() {
                self.first_failure = Some(FailureJson { report: r.title.clone(), check: c.into() });
            }
        }
        self.passed &= r.passed();
        self.reports.push(r.into());
        if let Some(ms) = millis {
            self.timings.get_or_insert_with(Vec::new).push(TimingJson { report: r.title.clone(), millis: ms });
        }
    }

    pub fn fail_with(&mut self, error: impl Into<String>) {
        self.passed = false;
        self.error = Some(error.into());
    }

    pub fn to_json(&self) -> String {
        crate::bundle::to_canonical_json(self)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!("{}\n", r.title));
            for c in &r.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {}\n", c.name));
                if let Some(w) = c.witness.as_ref().filter(|_| !c.passed) {
                    if !w.labels.is_empty() {
                        out.push_str(&format!("         witness: {}\n", w.labels.join(", ")));
                    }
                    out.push_str(&format!("         lhs: {}\n", w.lhs));
                    if !w.rhs.is_empty() {
                        out.push_str(&format!("         rhs: {}\n", w.rhs));
                    }
                }
            }
            for (n, v) in &r.flags {
                out.push_str(&format!("  [flag] {n} = {v}\n"));
            }
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        match &self.first_failure {
            Some(f) => out.push_str(&format!("FAIL: {}: {}\n", f.report, f.check.name)),
            None if self.passed => out.push_str("PASS\n"),
            None => out.push_str("FAIL\n"),
        }
        if let Some(ts) = &self.timings {
            for t in ts {
                out.push_str(&format!("  [time] {} {} ms\n", t.report, t.millis));
            }
        }
        out
    }
}
