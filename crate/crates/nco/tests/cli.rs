use std::process::{Command, Output};

fn nco(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nco")).args(args).env_remove("NCO_CONFIG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_lists_six_groups() {
    let o = nco(&["expand"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "alpha^2 * H0");
    assert!(lines[1].starts_with("eta * ("));
    assert!(lines[5].starts_with("theta^2 * ("));
}

#[test]
fn spectrum_header_reports_omega_tilde() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "omega_c = 8\nomega = 3\ncutoff_xy = 2\ncutoff_z = 1\n").unwrap();
    let o = nco(&["spectrum", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# omega_tilde = 5.0000000000000000e0\n"));
}

#[test]
fn config_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("env.cfg");
    std::fs::write(&cfg, "omega_c = 8\nomega = 3\ncutoff_xy = 1\ncutoff_z = 0\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nco")).args(["spectrum", "--format", "json"]).env("NCO_CONFIG", &cfg).output().unwrap();
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["omega_tilde"].as_f64(), Some(5.0));
    assert_eq!(doc["eigenvalues"].as_array().unwrap().len(), 3);
}

#[test]
fn pt_ground_row() {
    let o = nco(&["pt", "--eta", "1e-3", "--theta", "0", "--omega-c", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..3], ["0", "0", "0"]);
    let de: f64 = row[4].parse().unwrap();
    assert!((de - 2.2360679e-4).abs() < 1e-11);
    assert_eq!(row[5], "");
}

#[test]
fn sweep_ground_energies_follow_commutative_formula() {
    let o = nco(&["sweep", "--sweep", "omega_c:0:2:5", "--sweep-levels", "1", "--cutoff-xy", "4", "--cutoff-z", "2", "--workers", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("point,omega_c,omega_tilde,level,energy"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    for (k, r) in rows.iter().enumerate() {
        let wc = 0.5 * k as f64;
        let wt = (1.0 + wc * wc / 4.0_f64).sqrt();
        assert_eq!(r[1], wc);
        assert!((r[4] - (wt + 0.5)).abs() < 1e-12);
    }
}

#[test]
fn usage_and_config_errors_exit_one() {
    assert_eq!(nco(&["--alpha", "1.5", "pt"]).status.code(), Some(1));
    assert_eq!(nco(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nco(&["sweep"]).status.code(), Some(1));
    assert_eq!(nco(&["pt", "--config", "/nonexistent/nco.cfg"]).status.code(), Some(1));
    let o = nco(&["pt", "--format", "yaml"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("format"));
    assert_eq!(nco(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_succeeds_and_reports_the_mixed_group() {
    let o = nco(&["verify", "--format", "json", "--cutoff-xy", "6", "--cutoff-z", "3", "--theta", "1e-3", "--eta", "1e-3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mixed = doc["identities"].as_array().unwrap().iter().find(|c| c["name"] == "H_eta_theta").unwrap();
    assert_eq!(mixed["status"], "MISMATCH");
    assert_eq!(doc["corrections"].as_array().unwrap().len(), 30);
    assert!(String::from_utf8_lossy(&o.stderr).contains("H_eta_theta: MISMATCH"));
}

#[test]
fn out_file_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    std::fs::write(&out, "stale").unwrap();
    let o = nco(&["pt", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("n_rho,mu,n_z,"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
