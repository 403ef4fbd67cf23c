//! Job parsing, report rendering and the fixture table behind the
//! `planecurve` binary.

pub mod fixtures;
pub mod job;
pub mod report;

pub use job::{parse_job, Job, SchemaError, Violation};
pub use report::{run_job, Report, ReportBody, REPORT_SCHEMA};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const SCHEMA: u8 = 1;
    pub const COMPUTATION: u8 = 2;
    pub const PRECONDITION: u8 = 3;
}

/// Exit code for a core error.
pub fn exit_code(e: &planecurve::Error) -> u8 {
    if e.is_precondition() {
        exit::PRECONDITION
    } else {
        exit::COMPUTATION
    }
}

/// Deterministic pretty JSON for a report.
pub fn render_report(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
