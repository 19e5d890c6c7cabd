//! Output formats: 12-significant-digit plain numbers, CSV rows and JSON.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::Spectrum;
use crate::threshold::CreationSequence;
use crate::verifier::GapReport;

/// Formats `x` with `digits` significant digits, dropping trailing zeros.
///
/// Switches to exponent notation outside `[1e-5, 1e15)`, like `%g`.
pub fn format_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Round first so the exponent reflects the rounded value.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let fixed = format!("{:.*}", decimals, x);
    let fixed = trim_zeros(&fixed);
    if fixed == "-0" { "0".to_string() } else { fixed }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Plain rendering at 12 significant digits.
pub fn plain(x: f64) -> String {
    format_sig(x, 12)
}

pub fn plain_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "none".to_string(), plain)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// One row per graph: `sequence, order, λ_1, …, λ_n` (descending, 12
/// significant digits). Rows may have different lengths.
pub fn write_spectra_csv<W: Write>(out: W, rows: &[(CreationSequence, Spectrum)]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    w.write_record(["sequence", "order", "eigenvalues"]).map_err(csv_err)?;
    for (seq, spec) in rows {
        let mut record = vec![seq.to_string(), seq.order().to_string()];
        record.extend(spec.values.iter().map(|&v| plain(v)));
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Per-graph gap check rows.
pub fn write_gap_csv<W: Write>(out: W, rows: &[GapReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "sequence",
        "order",
        "count_in_interval",
        "expected_trivial",
        "min_nontrivial_distance",
        "subgap_count",
        "eta_plus",
        "eta_minus",
        "verdict",
    ])
    .map_err(csv_err)?;
    let opt = |x: Option<f64>| x.map_or_else(String::new, plain);
    for r in rows {
        w.write_record([
            r.graph.to_string(),
            r.order.to_string(),
            r.count_in_interval.to_string(),
            r.expected_trivial.to_string(),
            opt(r.min_nontrivial_distance),
            r.subgap_count.to_string(),
            opt(r.eta_plus),
            opt(r.eta_minus),
            if r.verdict.passed() { "pass" } else { "fail" }.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Pretty JSON with full double precision, newline-terminated.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
