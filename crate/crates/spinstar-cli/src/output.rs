use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

/// Full-precision scientific notation. 17 significant digits round-trip
/// exactly through any IEEE-754 double parser, so downstream consumers and
/// regression tests see stable bytes.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One `evolve` row; the serialized field order is the CSV column order.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EvolveRow {
    pub alpha_t: f64,
    pub a: f64,
    pub b: f64,
    pub e: f64,
    pub mean_sz: f64,
    pub var_sz: f64,
    pub two_b: f64,
    pub concurrence: f64,
    pub entangled: bool,
}

/// One `scan` surface row.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScanRow {
    pub k: u32,
    pub alpha_t: f64,
    pub concurrence: f64,
}

/// One row of the variance-against-bound figures.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundRow {
    pub alpha_t: f64,
    pub var_sz: f64,
    pub two_b: f64,
}

/// A row type that knows its CSV header and rendering.
pub trait CsvRecord {
    const HEADER: &'static str;
    fn push_row(&self, out: &mut String);
}

impl CsvRecord for EvolveRow {
    const HEADER: &'static str = "alpha_t,a,b,e,mean_sz,var_sz,two_b,concurrence,entangled";

    fn push_row(&self, out: &mut String) {
        for x in [self.alpha_t, self.a, self.b, self.e, self.mean_sz, self.var_sz, self.two_b] {
            out.push_str(&fmt_float(x));
            out.push(',');
        }
        out.push_str(&fmt_float(self.concurrence));
        out.push(',');
        out.push_str(if self.entangled { "true" } else { "false" });
    }
}

impl CsvRecord for ScanRow {
    const HEADER: &'static str = "k,alpha_t,concurrence";

    fn push_row(&self, out: &mut String) {
        out.push_str(&self.k.to_string());
        out.push(',');
        out.push_str(&fmt_float(self.alpha_t));
        out.push(',');
        out.push_str(&fmt_float(self.concurrence));
    }
}

impl CsvRecord for BoundRow {
    const HEADER: &'static str = "alpha_t,var_sz,two_b";

    fn push_row(&self, out: &mut String) {
        out.push_str(&fmt_float(self.alpha_t));
        out.push(',');
        out.push_str(&fmt_float(self.var_sz));
        out.push(',');
        out.push_str(&fmt_float(self.two_b));
    }
}

/// Comma-separated with a header row and LF line endings.
pub fn to_csv<R: CsvRecord>(rows: &[R]) -> String {
    let mut out = String::with_capacity((rows.len() + 1) * 64);
    out.push_str(R::HEADER);
    out.push('\n');
    for row in rows {
        row.push_row(&mut out);
        out.push('\n');
    }
    out
}

/// The same records as a JSON array of objects.
pub fn to_json<R: Serialize>(rows: &[R]) -> String {
    let mut text = serde_json::to_string_pretty(rows).expect("rows serialize infallibly");
    text.push('\n');
    text
}

/// Write the payload to the file, or to standard output when no path is set.
pub fn emit(out: Option<&Path>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}
