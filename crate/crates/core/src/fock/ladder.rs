//! Action of the six canonical operators on circular oscillator states.
//!
//! With in-plane reference frequency `w~` and axial frequency `omega`:
//!
//! ```text
//! a_x = (a+ + a-)/sqrt2,     a_y = i (a+ - a-)/sqrt2
//! x   = sqrt(hbar/2m w~) (a_x + a_x^+),  p_x = i sqrt(m hbar w~/2) (a_x^+ - a_x)
//! z   = sqrt(hbar/2m omega) (a_z + a_z^+), p_z = i sqrt(m hbar omega/2) (a_z^+ - a_z)
//! ```
//!
//! so that `L_z = x p_y - y p_x = hbar (N+ - N-)`.

use num_complex::Complex64;

use super::basis::BasisState;
use crate::model::PhysicalParams;
use crate::opalg::CanonicalOp;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LadderScales {
    /// `sqrt(hbar / 2 m w~) / sqrt2`
    pub pos_xy: f64,
    /// `sqrt(m hbar w~ / 2) / sqrt2`
    pub mom_xy: f64,
    /// `sqrt(hbar / 2 m omega)`
    pub pos_z: f64,
    /// `sqrt(m hbar omega / 2)`
    pub mom_z: f64,
}

impl LadderScales {
    pub fn new(p: &PhysicalParams) -> Self {
        let wt = p.omega_tilde();
        Self {
            pos_xy: libm::sqrt(p.hbar / (2.0 * p.mass * wt)) * core::f64::consts::FRAC_1_SQRT_2,
            mom_xy: libm::sqrt(p.mass * p.hbar * wt / 2.0) * core::f64::consts::FRAC_1_SQRT_2,
            pos_z: libm::sqrt(p.hbar / (2.0 * p.mass * p.omega)),
            mom_z: libm::sqrt(p.mass * p.hbar * p.omega / 2.0),
        }
    }
}

/// Up to four `(state, amplitude)` pairs.
#[derive(Clone, Debug, Default)]
pub struct Action {
    len: usize,
    items: [(BasisState, Complex64); 4],
}

impl Action {
    fn push(&mut self, s: BasisState, a: Complex64) {
        self.items[self.len] = (s, a);
        self.len += 1;
    }

    pub fn iter(&self) -> impl Iterator<Item = &(BasisState, Complex64)> {
        self.items[..self.len].iter()
    }
}

fn sqrt_u(n: u32) -> f64 {
    libm::sqrt(f64::from(n))
}

/// `op |s>` as a list of outgoing states with amplitudes; no truncation.
pub fn apply(op: CanonicalOp, s: BasisState, scales: &LadderScales) -> Action {
    let mut out = Action::default();
    let c = |re: f64, im: f64| Complex64::new(re, im);
    match op {
        CanonicalOp::X | CanonicalOp::Y | CanonicalOp::Px | CanonicalOp::Py => {
            // coefficients of (a+, a-, a+^dag, a-^dag)
            let (g, ap, am, cp, cm) = match op {
                CanonicalOp::X => (scales.pos_xy, c(1., 0.), c(1., 0.), c(1., 0.), c(1., 0.)),
                CanonicalOp::Y => (scales.pos_xy, c(0., 1.), c(0., -1.), c(0., -1.), c(0., 1.)),
                CanonicalOp::Px => (scales.mom_xy, c(0., -1.), c(0., -1.), c(0., 1.), c(0., 1.)),
                _ => (scales.mom_xy, c(1., 0.), c(-1., 0.), c(1., 0.), c(-1., 0.)),
            };
            if s.n_plus > 0 {
                out.push(BasisState::new(s.n_plus - 1, s.n_minus, s.n_z), ap * (g * sqrt_u(s.n_plus)));
            }
            if s.n_minus > 0 {
                out.push(BasisState::new(s.n_plus, s.n_minus - 1, s.n_z), am * (g * sqrt_u(s.n_minus)));
            }
            out.push(BasisState::new(s.n_plus + 1, s.n_minus, s.n_z), cp * (g * sqrt_u(s.n_plus + 1)));
            out.push(BasisState::new(s.n_plus, s.n_minus + 1, s.n_z), cm * (g * sqrt_u(s.n_minus + 1)));
        }
        CanonicalOp::Z | CanonicalOp::Pz => {
            let (g, lower, raise) = if op == CanonicalOp::Z {
                (scales.pos_z, c(1., 0.), c(1., 0.))
            } else {
                (scales.mom_z, c(0., -1.), c(0., 1.))
            };
            if s.n_z > 0 {
                out.push(BasisState::new(s.n_plus, s.n_minus, s.n_z - 1), lower * (g * sqrt_u(s.n_z)));
            }
            out.push(BasisState::new(s.n_plus, s.n_minus, s.n_z + 1), raise * (g * sqrt_u(s.n_z + 1)));
        }
    }
    out
}
