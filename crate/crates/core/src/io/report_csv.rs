//! CSV series reports.
//!
//! ```text
//! j,boundary_distance,term,partial_sum
//! 0,5.0000000000000000e-1,2.5000000000000000e-1,2.5000000000000000e-1
//! ...
//! # verdict: diverging-linearly (heuristic)
//! # diagnostics: last_increment=... increment_ratio=... linear_fit_slope=... linear_fit_residual=...
//! # tool: udseq 0.1.0
//! ```

use std::fmt::Write as _;

use super::TOOL_VERSION;
use crate::analysis::SumReport;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "j,boundary_distance,term,partial_sum";

/// 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn emit_report_csv(report: &SumReport) -> Vec<u8> {
    let mut out = String::with_capacity(80 * (report.len() + 4));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for j in 0..report.len() {
        let _ = writeln!(
            out,
            "{j},{},{},{}",
            num(report.boundary_distances[j]),
            num(report.terms[j]),
            num(report.partial_sums[j])
        );
    }
    let d = &report.diagnostics;
    let ratio = d.increment_ratio.map_or_else(|| "none".to_string(), num);
    let _ = writeln!(out, "# verdict: {} (heuristic)", report.verdict);
    let _ = writeln!(
        out,
        "# diagnostics: last_increment={} increment_ratio={} linear_fit_slope={} linear_fit_residual={}",
        num(d.last_increment),
        ratio,
        num(d.linear_fit_slope),
        num(d.linear_fit_residual)
    );
    let _ = writeln!(out, "# tool: {TOOL_VERSION}");
    out.into_bytes()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    pub j: usize,
    pub boundary_distance: f64,
    pub term: f64,
    pub partial_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedReport {
    pub rows: Vec<ReportRow>,
    /// Text after `# verdict: `.
    pub verdict: String,
    /// Text after `# diagnostics: `.
    pub diagnostics: String,
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Schema {
        path: format!("line {line}"),
        message: message.into(),
    }
}

/// Reads a report back, checking the header, the row indices and that the
/// `partial_sum` column is nondecreasing.
pub fn parse_report_csv(bytes: &[u8]) -> Result<ParsedReport> {
    let text = std::str::from_utf8(bytes).map_err(|e| bad(0, e.to_string()))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => return Err(bad(1, format!("expected header `{CSV_HEADER}`"))),
    }
    let mut rows: Vec<ReportRow> = Vec::new();
    let mut verdict = None;
    let mut diagnostics = None;
    for (i, line) in lines {
        let lineno = i + 1;
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(v) = comment.strip_prefix("verdict: ") {
                verdict = Some(v.to_string());
            } else if let Some(v) = comment.strip_prefix("diagnostics: ") {
                diagnostics = Some(v.to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(bad(
                lineno,
                format!("expected 4 fields, found {}", fields.len()),
            ));
        }
        let j: usize = fields[0]
            .parse()
            .map_err(|_| bad(lineno, format!("bad index `{}`", fields[0])))?;
        let mut values = [0.0; 3];
        for (slot, field) in values.iter_mut().zip(&fields[1..]) {
            *slot = field
                .parse()
                .map_err(|_| bad(lineno, format!("bad number `{field}`")))?;
        }
        if j != rows.len() {
            return Err(bad(
                lineno,
                format!("expected row index {}, found {j}", rows.len()),
            ));
        }
        if let Some(prev) = rows.last() {
            if values[2] < prev.partial_sum {
                return Err(bad(lineno, "partial_sum decreases"));
            }
        }
        rows.push(ReportRow {
            j,
            boundary_distance: values[0],
            term: values[1],
            partial_sum: values[2],
        });
    }
    Ok(ParsedReport {
        rows,
        verdict: verdict.ok_or_else(|| bad(0, "missing `# verdict:` line"))?,
        diagnostics: diagnostics.ok_or_else(|| bad(0, "missing `# diagnostics:` line"))?,
    })
}
