use alloc::sync::Arc;
use alloc::vec::Vec;

use super::basis::{BasisState, TruncatedBasis};
use super::eigen::eigensolve;
use super::hamiltonian::{Channel, ShiftedHamiltonian};
use super::pt::degeneracy_clusters;
use crate::error::{Error, Result};
use crate::model::PhysicalParams;

/// Smallest overlap with the unperturbed basis vector still accepted as the
/// same eigenstate.
pub const MIN_TRACKING_OVERLAP: f64 = 0.9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdOptions {
    pub step: f64,
    /// Number of step sizes `h, h/2, ...` fed to Richardson extrapolation.
    pub levels: usize,
    pub deg_tol: f64,
}

impl Default for FdOptions {
    fn default() -> Self {
        Self { step: 1e-4, levels: 2, deg_tol: 1e-8 }
    }
}

/// Richardson extrapolation of central differences whose error series is
/// even in the step, for steps halving at each level.
pub fn richardson(estimates: &[f64]) -> f64 {
    let mut table: Vec<f64> = estimates.to_vec();
    let mut factor = 4.0;
    for k in 1..estimates.len() {
        for l in (k..estimates.len()).rev() {
            table[l] = table[l] + (table[l] - table[l - 1]) / (factor - 1.0);
        }
        factor *= 4.0;
    }
    *table.last().unwrap_or(&f64::NAN)
}

/// `dE/d(channel)` at zero for each requested state, the other channel held
/// at zero. The eigenstate at each step is the one with the largest overlap
/// on the unperturbed basis vector.
pub fn fd_slopes(
    params: &PhysicalParams,
    channel: Channel,
    basis: Arc<TruncatedBasis>,
    states: &[BasisState],
    opts: &FdOptions,
) -> Result<Vec<Result<f64>>> {
    params.validate()?;
    let hamiltonian = ShiftedHamiltonian::new();
    let indices: Vec<Result<usize>> = states.iter().map(|s| basis.require(s)).collect();

    let h0 = hamiltonian.unperturbed_matrix(params, basis.clone())?;
    let energies: Vec<f64> = h0.diagonal().iter().map(|c| c.re).collect();
    let clusters = degeneracy_clusters(&energies, opts.deg_tol * params.hbar * params.omega_tilde());
    let mut degenerate = alloc::vec![false; basis.len()];
    for c in clusters.iter().filter(|c| c.len() > 1) {
        for &i in c {
            degenerate[i] = true;
        }
    }

    let levels = opts.levels.max(1);
    // estimates[state][level]
    let mut estimates: Vec<Vec<f64>> = alloc::vec![Vec::with_capacity(levels); states.len()];
    let mut failures: Vec<Option<Error>> = alloc::vec![None; states.len()];
    let mut h = opts.step;
    for _ in 0..levels {
        let energy_at = |t: f64| -> Result<Vec<core::result::Result<f64, Error>>> {
            let p = channel.isolate(params, t);
            let spec = eigensolve(&hamiltonian.matrix(&p, basis.clone())?, true)?;
            let vectors = spec.eigenvectors.as_ref().expect("vectors requested");
            Ok(indices
                .iter()
                .map(|idx| {
                    let &i = idx.as_ref().map_err(Clone::clone)?;
                    let (best, overlap) = vectors
                        .iter()
                        .enumerate()
                        .map(|(k, v)| (k, v[i].norm_sqr()))
                        .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
                    if overlap < MIN_TRACKING_OVERLAP {
                        return Err(Error::TrackingLost { overlap });
                    }
                    Ok(spec.eigenvalues[best])
                })
                .collect())
        };
        let plus = energy_at(h)?;
        let minus = energy_at(-h)?;
        for (k, (ep, em)) in plus.into_iter().zip(minus).enumerate() {
            match (ep, em) {
                (Ok(a), Ok(b)) => estimates[k].push((a - b) / (2.0 * h)),
                (Err(e), _) | (_, Err(e)) => {
                    failures[k].get_or_insert(e);
                }
            }
        }
        h *= 0.5;
    }

    Ok(indices
        .into_iter()
        .zip(estimates)
        .zip(failures)
        .map(|((idx, est), fail)| {
            let i = idx?;
            if degenerate[i] {
                return Err(Error::DegenerateState);
            }
            if let Some(e) = fail {
                return Err(e);
            }
            Ok(richardson(&est))
        })
        .collect())
}

/// Single-state form of [`fd_slopes`].
pub fn fd_slope(
    params: &PhysicalParams,
    channel: Channel,
    basis: Arc<TruncatedBasis>,
    state: BasisState,
    opts: &FdOptions,
) -> Result<f64> {
    fd_slopes(params, channel, basis, &[state], opts)?
        .pop()
        .expect("one state requested")
}
