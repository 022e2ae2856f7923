//! Verification suites over `torsion-core`, with text and JSON reports.

pub mod report;
pub mod suites;

pub use report::{emit_report, CaseRecord, CaseStatus, Counts, Format, SuiteReport, ARTIFACT_VERSION};
pub use suites::{case_rng, run_all, run_suite, Params, SuiteError, SUITES};
