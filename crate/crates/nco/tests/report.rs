use nco::report::{corrections_csv, report_json, CSV_HEADER};
use nco::{emit_report, Format};
use nco_core::fock::BasisState;
use nco_core::model::PhysicalParams;
use nco_core::opalg::named;
use nco_core::verify::{label_window, verify_corrections, CheckKind, CorrectionOptions, IdentityCheck, CONVENTIONS};

#[test]
fn empty_inputs_give_header_only_csv() {
    let csv = emit_report(&[], &[], &CONVENTIONS, Format::Csv).unwrap();
    assert_eq!(csv, format!("{}\n", CSV_HEADER.join(",")));
}

#[test]
fn matching_identity_has_empty_residual_list() {
    let check = IdentityCheck::new("x", CheckKind::Internal, named::x(), named::x());
    let doc: serde_json::Value = serde_json::from_str(&emit_report(&[check], &[], &CONVENTIONS, Format::Json).unwrap()).unwrap();
    let id = &doc["identities"][0];
    assert_eq!(id["name"], "x");
    assert_eq!(id["status"], "MATCH");
    assert_eq!(id["residual_terms"].as_array().unwrap().len(), 0);
    assert!(doc["corrections"].as_array().unwrap().is_empty());
    for key in ["binomial", "mu_sign", "p_z_typo"] {
        assert!(!doc["conventions"][key].as_str().unwrap().is_empty());
    }
}

#[test]
fn mismatch_lists_residual_terms() {
    let check = IdentityCheck::new("x vs y", CheckKind::Reference, named::x(), named::y());
    let doc = report_json(&[check], &[], &CONVENTIONS);
    assert_eq!(doc["identities"][0]["status"], "MISMATCH");
    let terms: Vec<&str> = doc["identities"][0]["residual_terms"].as_array().unwrap().iter().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(terms.len(), 2);
}

fn window_rows(with_fd: bool) -> Vec<nco_core::verify::CorrectionRow> {
    let p = PhysicalParams::default().with_theta(1e-3).with_eta(1e-3);
    let opts = CorrectionOptions { fd: if with_fd { CorrectionOptions::default().fd } else { None }, ..CorrectionOptions::default() };
    verify_corrections(&p, &label_window(4, 1), &opts).unwrap()
}

#[test]
fn grid_csv_has_thirty_rows_and_is_stable() {
    let rows = window_rows(true);
    let a = corrections_csv(&rows).unwrap();
    let b = corrections_csv(&window_rows(true)).unwrap();
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines.len(), 31);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 12));
}

#[test]
fn numbers_round_trip() {
    let rows = window_rows(false);
    let csv = corrections_csv(&rows).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    for (rec, row) in reader.records().zip(&rows) {
        let rec = rec.unwrap();
        assert_eq!(rec[4].parse::<f64>().unwrap(), row.de_pt);
        assert_eq!(rec[3].parse::<f64>().unwrap(), row.e0);
        assert_eq!(&rec[5], "");
        assert_eq!(rec[1].parse::<i32>().unwrap(), row.qn.mu);
    }
    let doc = report_json(&[], &rows, &CONVENTIONS);
    let first = &doc["corrections"][0];
    assert_eq!(first["dE_pt"].as_f64().unwrap(), rows[0].de_pt);
    assert!(first["dE_fd"].is_null());
    assert_eq!(rows[0].state, BasisState::new(0, 0, 0));
}
