use std::fmt;
use std::io::Write;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be evaluated; counts as a failure.
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: String,
    pub deformation: Option<String>,
    pub status: Status,
    pub detail: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = self.deformation.as_deref().map(|d| format!(" [{d}]")).unwrap_or_default();
        write!(f, "{} {}{}: {}", self.status, self.check, target, self.detail)
    }
}

/// Writes reports as text lines or as one JSON array; returns the exit code.
pub fn emit(reports: &[Report], json: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    if json {
        serde_json::to_writer_pretty(&mut *out, reports)?;
        writeln!(out)?;
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        writeln!(out, "{passed}/{} checks passed", reports.len())?;
    }
    Ok(if reports.iter().all(Report::passed) { 0 } else { 1 })
}
