//! Subcommand bodies. Each returns the document it would write plus an exit
//! status; writing is left to [`deliver`].

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use nco_core::fock::{full_spectrum, FdOptions, ShiftedHamiltonian};
use nco_core::opalg::named::{self, scalar};
use nco_core::opalg::{Order, Symbol};
use nco_core::verify::{
    label_window, row_violations, verify_commutators, verify_corrections, verify_expansion, CorrectionOptions, CorrectionRow, IdentityCheck,
    RowViolation, Status, CONVENTIONS,
};
use nco_core::PhysicalParams;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Format, RunConfig, SweepAxis};
use crate::report::{conventions_json, emit_report, fmt_f64, num, row_json, to_pretty};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Expand,
    Spectrum,
    Pt,
    Verify,
    Sweep,
}

/// Exit code for an engine-vs-engine disagreement in `verify`.
pub const EXIT_VIOLATION: i32 = 2;
/// Exit code for usage and configuration errors.
pub const EXIT_USAGE: i32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub body: String,
    pub exit_code: i32,
    /// Lines for standard error.
    pub diagnostics: Vec<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, exit_code: 0, diagnostics: Vec::new() }
    }
}

pub fn execute(cmd: Command, cfg: &RunConfig) -> anyhow::Result<Output> {
    match cmd {
        Command::Expand => Ok(Output::ok(expand(cfg.format))),
        Command::Spectrum => spectrum(cfg),
        Command::Pt => pt(cfg),
        Command::Verify => verify(cfg),
        Command::Sweep => sweep(cfg),
    }
}

/// Writes `body` to `cfg.out` through a temporary file in the same
/// directory, or to stdout when no path is set.
pub fn deliver(cfg: &RunConfig, body: &str) -> std::io::Result<()> {
    match &cfg.out {
        Some(path) => write_atomic(path, body.as_bytes()),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

const GROUPS: [(Order, &str); 6] = [
    ((0, 0), "1"),
    ((0, 1), "eta"),
    ((1, 0), "theta"),
    ((1, 1), "eta*theta"),
    ((0, 2), "eta^2"),
    ((2, 0), "theta^2"),
];

/// The shifted Hamiltonian grouped by order. The zeroth group is written as
/// `alpha^2 * H0` when it is exactly that.
pub fn expand(format: Format) -> String {
    let ham = ShiftedHamiltonian::new();
    let h0 = named::hamiltonian() * scalar(1, 1, &[(Symbol::Alpha, 2)]);
    let rendered: Vec<(Order, &str, String)> = GROUPS
        .iter()
        .map(|&(order, factor)| {
            let part = ham.part(order);
            let text = if order == (0, 0) && part == h0 { "alpha^2 * H0".to_string() } else { format!("{factor} * ({part})") };
            (order, factor, text)
        })
        .collect();
    match format {
        Format::Csv => rendered.iter().map(|(_, _, t)| format!("{t}\n")).collect(),
        Format::Json => {
            let groups: Vec<Value> = rendered
                .iter()
                .map(|((a, b), factor, text)| json!({ "theta_power": a, "eta_power": b, "factor": factor, "expression": text }))
                .collect();
            to_pretty(&json!({ "groups": groups }))
        }
    }
}

fn spectrum(cfg: &RunConfig) -> anyhow::Result<Output> {
    let p = &cfg.params;
    let spec = full_spectrum(p, cfg.cutoff_xy, cfg.cutoff_z)?;
    let wt = p.omega_tilde();
    let body = match cfg.format {
        Format::Csv => {
            let mut s = format!("# omega_tilde = {}\n# cutoffs = {},{}\nlevel,energy\n", fmt_f64(wt), cfg.cutoff_xy, cfg.cutoff_z);
            for (k, e) in spec.eigenvalues.iter().enumerate() {
                s.push_str(&format!("{k},{}\n", fmt_f64(*e)));
            }
            s
        }
        Format::Json => to_pretty(&json!({
            "omega_tilde": num(wt),
            "cutoff_xy": cfg.cutoff_xy,
            "cutoff_z": cfg.cutoff_z,
            "eigenvalues": spec.eigenvalues.iter().map(|&e| num(e)).collect::<Vec<_>>(),
        })),
    };
    Ok(Output::ok(body))
}

fn correction_options(cfg: &RunConfig, with_fd: bool) -> CorrectionOptions {
    CorrectionOptions {
        cutoffs: (cfg.cutoff_xy, cfg.cutoff_z),
        deg_tol: cfg.deg_tol,
        fd: with_fd.then_some(FdOptions { step: cfg.fd_step, levels: cfg.fd_levels, deg_tol: cfg.deg_tol }),
    }
}

fn rows_for(cfg: &RunConfig, params: &PhysicalParams, with_fd: bool) -> anyhow::Result<Vec<CorrectionRow>> {
    let states = label_window(cfg.rows_xy, cfg.rows_z);
    Ok(verify_corrections(params, &states, &correction_options(cfg, with_fd))?)
}

fn pt(cfg: &RunConfig) -> anyhow::Result<Output> {
    let rows = rows_for(cfg, &cfg.params, false)?;
    Ok(Output::ok(emit_report(&[], &rows, &CONVENTIONS, cfg.format)?))
}

fn verify(cfg: &RunConfig) -> anyhow::Result<Output> {
    let mut checks: Vec<IdentityCheck> = verify_commutators();
    checks.extend(verify_expansion());
    let rows = rows_for(cfg, &cfg.params, true)?;

    let mut diagnostics = Vec::new();
    let mut failed = false;
    for c in &checks {
        diagnostics.push(format!("{}: {}", c.name, c.status.as_str()));
        if c.status == Status::Mismatch {
            diagnostics.push(format!("  residual: {}", c.residual));
        }
        failed |= c.is_violation();
    }
    for (k, v) in row_violations(&rows, &cfg.params) {
        let r = &rows[k];
        let what = match v {
            RowViolation::FiniteDifference => "finite difference",
            RowViolation::DerivedClosedForm => "derived closed form",
        };
        diagnostics.push(format!("row (n_rho={}, mu={}, n_z={}): perturbation theory disagrees with {what}", r.qn.n_rho, r.qn.mu, r.qn.n_z));
        failed = true;
    }
    let body = emit_report(&checks, &rows, &CONVENTIONS, cfg.format)?;
    Ok(Output { body, exit_code: if failed { EXIT_VIOLATION } else { 0 }, diagnostics })
}

/// One evaluated sweep point.
#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub value: f64,
    pub omega_tilde: f64,
    pub energies: Vec<f64>,
    pub rows: Vec<CorrectionRow>,
}

/// Evaluates every point of the axis on a pool of `cfg.workers` threads.
/// Results come back in axis order whatever the pool size.
pub fn sweep_points(cfg: &RunConfig, axis: &SweepAxis) -> anyhow::Result<Vec<SweepPoint>> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().context("building worker pool")?;
    let values = axis.values();
    let results: Vec<anyhow::Result<SweepPoint>> = pool.install(|| {
        values
            .par_iter()
            .map(|&value| {
                let mut params = cfg.params;
                axis.param.set(&mut params, value);
                params.validate().with_context(|| format!("{} = {value}", axis.param.name()))?;
                let spec = full_spectrum(&params, cfg.cutoff_xy, cfg.cutoff_z)?;
                let energies = spec.eigenvalues.iter().copied().take(cfg.sweep_levels).collect();
                let rows = rows_for(cfg, &params, false)?;
                Ok(SweepPoint { value, omega_tilde: params.omega_tilde(), energies, rows })
            })
            .collect()
    });
    results.into_iter().collect()
}

fn sweep(cfg: &RunConfig) -> anyhow::Result<Output> {
    let axis = cfg.sweep.context("sweep needs an axis (`--sweep param:start:stop:count`)")?;
    let points = sweep_points(cfg, &axis)?;
    let name = axis.param.name();
    let body = match cfg.format {
        Format::Csv => {
            let mut s = format!("point,{name},omega_tilde,level,energy\n");
            for (k, p) in points.iter().enumerate() {
                for (level, e) in p.energies.iter().enumerate() {
                    s.push_str(&format!("{k},{},{},{level},{}\n", fmt_f64(p.value), fmt_f64(p.omega_tilde), fmt_f64(*e)));
                }
            }
            s
        }
        Format::Json => {
            let pts: Vec<Value> = points
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    json!({
                        "point": k,
                        "value": num(p.value),
                        "omega_tilde": num(p.omega_tilde),
                        "energies": p.energies.iter().map(|&e| num(e)).collect::<Vec<_>>(),
                        "corrections": p.rows.iter().map(row_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            to_pretty(&json!({
                "axis": { "param": name, "start": num(axis.start), "stop": num(axis.stop), "count": axis.count },
                "points": pts,
                "conventions": conventions_json(&CONVENTIONS),
            }))
        }
    };
    Ok(Output::ok(body))
}

