//! Serialization formats and the command-line front end.

pub mod cli;
mod report_csv;
mod sequence_file;

pub use report_csv::{emit_report_csv, parse_report_csv, ParsedReport, ReportRow, CSV_HEADER};
pub use sequence_file::{decode_sequence, encode_sequence, FORMAT_TAG};

/// Version string written into every output file.
pub const TOOL_VERSION: &str = concat!("udseq ", env!("CARGO_PKG_VERSION"));
