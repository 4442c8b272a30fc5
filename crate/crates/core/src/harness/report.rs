use crate::error::{GeomError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub inputs: serde_json::Value,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seed: u64,
    /// Wall time; 0 unless timing was requested, so reports stay reproducible.
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub detail: BTreeMap<String, f64>,
}

impl CheckReport {
    pub fn new(check_id: &str, inputs: serde_json::Value, lhs: f64, rhs: f64, tolerance: f64, pass: bool) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            inputs,
            lhs,
            rhs,
            ratio: if rhs != 0.0 { lhs / rhs } else { f64::NAN },
            tolerance,
            pass,
            seed: 0,
            runtime_ms: 0,
            detail: BTreeMap::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_detail(mut self, key: &str, value: f64) -> Self {
        self.detail.insert(key.to_string(), value);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(GeomError::ParseError(format!("unknown format `{other}`"))),
        }
    }
}

pub const CSV_HEADER: [&str; 10] = [
    "check_id",
    "dim",
    "alpha",
    "seed",
    "lhs",
    "rhs",
    "ratio",
    "std_error",
    "pass",
    "runtime_ms",
];

fn input_field(r: &CheckReport, key: &str) -> String {
    match r.inputs.get(key) {
        Some(serde_json::Value::Number(n)) => n.to_string(),
        _ => String::new(),
    }
}

/// Render reports as JSON (array) or CSV; writes to `out` when given.
pub fn emit_report(reports: &[CheckReport], format: ReportFormat, out: Option<&Path>) -> Result<String> {
    if reports.is_empty() {
        return Err(GeomError::EmptyReport);
    }
    let text = match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).map_err(|e| GeomError::Io(e.to_string()))?;
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| GeomError::Io(e.to_string());
            w.write_record(CSV_HEADER).map_err(io)?;
            for r in reports {
                let std_error = r.detail.get("std_error").copied().unwrap_or(0.0);
                w.write_record([
                    r.check_id.clone(),
                    input_field(r, "dim"),
                    input_field(r, "alpha"),
                    r.seed.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.ratio.to_string(),
                    std_error.to_string(),
                    r.pass.to_string(),
                    r.runtime_ms.to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| GeomError::Io(e.to_string()))?)
                .map_err(|e| GeomError::Io(e.to_string()))?
        }
    };
    if let Some(path) = out {
        std::fs::write(path, &text)?;
    }
    Ok(text)
}
