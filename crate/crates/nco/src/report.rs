//! CSV and JSON serialisation. Floats are written as `{:.16e}`, which
//! round-trips every `f64`; nothing time- or host-dependent goes in.

use nco_core::verify::{Conventions, CorrectionRow, IdentityCheck};
use serde::Serialize;
use serde_json::{json, Number, Value};

use crate::config::Format;

pub const CSV_HEADER: [&str; 12] = [
    "n_rho", "mu", "n_z", "E0", "dE_pt", "dE_fd", "dE_paper", "dE_derived", "res_paper", "res_derived", "res_fd", "degenerate",
];

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// JSON number carrying the exact `{:.16e}` text; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    fmt_f64(x).parse::<Number>().map(Value::Number).unwrap_or(Value::Null)
}

fn opt_num(x: Option<f64>) -> Value {
    x.map(num).unwrap_or(Value::Null)
}

fn csv_error(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}

pub fn corrections_csv(rows: &[CorrectionRow]) -> std::io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in rows {
        w.write_record([
            r.qn.n_rho.to_string(),
            r.qn.mu.to_string(),
            r.qn.n_z.to_string(),
            fmt_f64(r.e0),
            fmt_f64(r.de_pt),
            fmt_opt(r.de_fd),
            fmt_f64(r.de_paper),
            fmt_f64(r.de_derived),
            fmt_f64(r.res_paper),
            fmt_f64(r.res_derived),
            fmt_opt(r.res_fd),
            r.degenerate.to_string(),
        ])
        .map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

pub fn row_json(r: &CorrectionRow) -> Value {
    json!({
        "n_rho": r.qn.n_rho,
        "mu": r.qn.mu,
        "n_z": r.qn.n_z,
        "n_plus": r.state.n_plus,
        "n_minus": r.state.n_minus,
        "E0": num(r.e0),
        "dE_pt": num(r.de_pt),
        "dE_fd": opt_num(r.de_fd),
        "dE_paper": num(r.de_paper),
        "dE_derived": num(r.de_derived),
        "res_paper": num(r.res_paper),
        "res_derived": num(r.res_derived),
        "res_fd": opt_num(r.res_fd),
        "degenerate": r.degenerate,
    })
}

#[derive(Serialize)]
struct IdentityJson {
    name: String,
    status: &'static str,
    residual_terms: Vec<String>,
}

pub fn identity_json(c: &IdentityCheck) -> Value {
    serde_json::to_value(IdentityJson {
        name: c.name.clone(),
        status: c.status.as_str(),
        residual_terms: c.residual_terms().iter().map(|t| t.to_string()).collect(),
    })
    .expect("plain struct serialises")
}

pub fn conventions_json(c: &Conventions) -> Value {
    json!({ "binomial": c.binomial, "mu_sign": c.mu_sign, "p_z_typo": c.p_z_typo })
}

pub fn report_json(checks: &[IdentityCheck], rows: &[CorrectionRow], conventions: &Conventions) -> Value {
    json!({
        "identities": checks.iter().map(identity_json).collect::<Vec<_>>(),
        "corrections": rows.iter().map(row_json).collect::<Vec<_>>(),
        "conventions": conventions_json(conventions),
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

/// The identity/correction document. CSV carries only the correction rows.
pub fn emit_report(checks: &[IdentityCheck], rows: &[CorrectionRow], conventions: &Conventions, format: Format) -> std::io::Result<String> {
    match format {
        Format::Csv => corrections_csv(rows),
        Format::Json => Ok(to_pretty(&report_json(checks, rows, conventions))),
    }
}
