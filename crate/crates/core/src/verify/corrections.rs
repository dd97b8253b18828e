use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Result;
use crate::fock::{enumerate_basis, fd_slopes, first_order_pt, BasisState, Channel, FdOptions, ShiftedHamiltonian};
use crate::model::{derived_corrections, reference_corrections, PhysicalParams, QuantumNumbers};

/// One state's first-order correction computed every available way.
/// Residuals are `dE_pt` minus the other value.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionRow {
    pub state: BasisState,
    /// Labels with `mu = n+ - n-`.
    pub qn: QuantumNumbers,
    pub e0: f64,
    pub de_pt: f64,
    /// Absent for degenerate states or when finite differences were skipped.
    pub de_fd: Option<f64>,
    pub de_paper: f64,
    pub de_derived: f64,
    pub res_paper: f64,
    pub res_derived: f64,
    pub res_fd: Option<f64>,
    pub degenerate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrectionOptions {
    /// Basis cutoffs `(n_xy, n_z)` used for perturbation theory and
    /// finite differences.
    pub cutoffs: (u32, u32),
    pub deg_tol: f64,
    /// `None` skips the finite-difference column.
    pub fd: Option<FdOptions>,
}

impl Default for CorrectionOptions {
    fn default() -> Self {
        Self { cutoffs: (12, 6), deg_tol: 1e-8, fd: Some(FdOptions::default()) }
    }
}

/// Relative tolerance between perturbation theory and finite differences.
pub const FD_TOL: f64 = 1e-6;
/// Relative tolerance between perturbation theory and the derived closed forms.
pub const DERIVED_TOL: f64 = 1e-8;

/// States with `n+ + n- <= n_xy` and `n_z <= n_z`, in basis order.
pub fn label_window(n_xy: u32, n_z: u32) -> Vec<BasisState> {
    enumerate_basis(n_xy, n_z).map(|b| b.states().to_vec()).unwrap_or_default()
}

/// Tabulates `E0`, the perturbative correction, its finite-difference
/// counterpart and both closed forms for each requested state.
pub fn verify_corrections(params: &PhysicalParams, states: &[BasisState], opts: &CorrectionOptions) -> Result<Vec<CorrectionRow>> {
    params.validate()?;
    let basis = Arc::new(enumerate_basis(opts.cutoffs.0, opts.cutoffs.1)?);
    let indices = states.iter().map(|s| basis.require(s)).collect::<Result<Vec<_>>>()?;
    let ham = ShiftedHamiltonian::new();
    let h0 = ham.unperturbed_matrix(params, basis.clone())?;
    let scale = params.hbar * params.omega_tilde();

    let mut de_pt = alloc::vec![0.0; states.len()];
    let mut degenerate = alloc::vec![false; states.len()];
    let mut de_fd: Vec<Option<f64>> = alloc::vec![opts.fd.map(|_| 0.0); states.len()];
    for channel in Channel::BOTH {
        let strength = channel.value(params);
        let v = ham.slope_matrix(channel, params, basis.clone())?;
        let pt = first_order_pt(&h0, &v, scale, opts.deg_tol)?;
        for (k, &i) in indices.iter().enumerate() {
            de_pt[k] += strength * pt.corrections[i];
            degenerate[k] |= pt.is_degenerate(i);
        }
        let Some(fd_opts) = opts.fd else { continue };
        if strength == 0.0 {
            continue;
        }
        let fd_opts = FdOptions { deg_tol: opts.deg_tol, ..fd_opts };
        let slopes = fd_slopes(params, channel, basis.clone(), states, &fd_opts)?;
        for (slot, slope) in de_fd.iter_mut().zip(slopes) {
            *slot = match (*slot, slope) {
                (Some(acc), Ok(s)) => Some(acc + strength * s),
                _ => None,
            };
        }
    }

    Ok(states
        .iter()
        .zip(indices)
        .enumerate()
        .map(|(k, (state, i))| {
            let qn = state.quantum_numbers();
            let paper = reference_corrections(qn, params).total();
            let derived = derived_corrections(qn, params).total();
            let fd = if degenerate[k] { None } else { de_fd[k] };
            CorrectionRow {
                state: *state,
                qn,
                e0: h0[(i, i)].re,
                de_pt: de_pt[k],
                de_fd: fd,
                de_paper: paper,
                de_derived: derived,
                res_paper: de_pt[k] - paper,
                res_derived: de_pt[k] - derived,
                res_fd: fd.map(|f| de_pt[k] - f),
                degenerate: degenerate[k],
            }
        })
        .collect())
}

/// Which engine-vs-engine agreement a row breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowViolation {
    FiniteDifference,
    DerivedClosedForm,
}

/// Engine-vs-engine checks on non-degenerate rows:
/// `|pt - fd| <= 1e-6 s` and `|pt - derived| <= 1e-8 s` with
/// `s = max(|pt|, 1e-6 hbar w~)`.
pub fn row_violations(rows: &[CorrectionRow], params: &PhysicalParams) -> Vec<(usize, RowViolation)> {
    let floor = 1e-6 * params.hbar * params.omega_tilde();
    let mut out = Vec::new();
    for (k, row) in rows.iter().enumerate().filter(|(_, r)| !r.degenerate) {
        let s = row.de_pt.abs().max(floor);
        if let Some(res) = row.res_fd {
            if res.abs().is_nan() || res.abs() > FD_TOL * s {
                out.push((k, RowViolation::FiniteDifference));
            }
        }
        if row.res_derived.is_nan() || row.res_derived.abs() > DERIVED_TOL * s {
            out.push((k, RowViolation::DerivedClosedForm));
        }
    }
    out
}
