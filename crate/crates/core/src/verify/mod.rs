//! Comparison reports: symbolic expansions against the hand-entered reference
//! expressions, and first-order corrections across perturbation theory,
//! finite differences and two sets of closed forms.
//!
//! Reference mismatches are recorded, not raised. Disagreements between the
//! engine's own routes are reported as violations.

mod corrections;
mod identities;
pub mod reference;

pub use corrections::{
    label_window, row_violations, verify_corrections, CorrectionOptions, CorrectionRow, RowViolation, DERIVED_TOL, FD_TOL,
};
pub use identities::{verify_commutators, verify_expansion, CheckKind, IdentityCheck, Status};

/// Conventions fixed where the source leaves a choice open. Written into
/// every report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub binomial: &'static str,
    pub mu_sign: &'static str,
    pub p_z_typo: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    binomial: "C(n,k) = n(n-1)...(n-k+1)/k! for k >= 0 (any integer n), C(n,k) = 0 for k < 0",
    mu_sign: "mu = n_plus - n_minus with L_z = hbar*mu; the H0 diagonal then carries -(1/2)*hbar*omega_c*mu, \
              the opposite sign to the closed-form spectrum, which maps onto it by mu -> -mu",
    p_z_typo: "p_z -> alpha*p_z + (eta/(2*alpha*hbar))*x - (eta/(2*alpha*hbar))*y",
};
