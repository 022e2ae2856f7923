//! Suite reports and their two renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Version string stamped into every report.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    /// Exploratory: shown but never gating.
    Report,
}

impl CaseStatus {
    pub fn label(self) -> &'static str {
        match self {
            CaseStatus::Pass => "PASS",
            CaseStatus::Fail => "FAIL",
            CaseStatus::Report => "REPORT",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case_id: String,
    pub params: Map<String, Value>,
    pub status: CaseStatus,
    pub expected: String,
    pub observed: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub artifact_version: String,
    pub seed: u64,
    pub suite: String,
    pub cases: Vec<CaseRecord>,
}

/// Tallies by status, in the order pass, fail, report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub report: usize,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            artifact_version: ARTIFACT_VERSION.to_string(),
            seed,
            suite: suite.to_string(),
            cases: Vec::new(),
        }
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for case in &self.cases {
            match case.status {
                CaseStatus::Pass => c.pass += 1,
                CaseStatus::Fail => c.fail += 1,
                CaseStatus::Report => c.report += 1,
            }
        }
        c
    }

    /// True when no gating case failed.
    pub fn passed(&self) -> bool {
        self.counts().fail == 0
    }

    /// Copy with every timing field zeroed, for byte comparisons.
    pub fn without_timing(&self) -> SuiteReport {
        let mut r = self.clone();
        for case in &mut r.cases {
            case.elapsed_ms = 0;
        }
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(r: &SuiteReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(r).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Text => render_text(r).into_bytes(),
    }
}

fn render_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "suite {} (seed {}, version {})", r.suite, r.seed, r.artifact_version);
    let width = r.cases.iter().map(|c| c.case_id.len()).max().unwrap_or(0);
    for c in &r.cases {
        let _ = writeln!(
            s,
            "  {:<6} {:<width$}  expected: {}  observed: {}  ({} ms)",
            c.status.label(),
            c.case_id,
            c.expected,
            c.observed,
            c.elapsed_ms,
        );
    }
    let n = r.counts();
    let _ = writeln!(s, "{}: {} pass, {} fail, {} report", r.suite, n.pass, n.fail, n.report);
    s
}
