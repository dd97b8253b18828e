use alloc::collections::BTreeMap;
use alloc::sync::Arc;

use super::basis::{enumerate_basis, TruncatedBasis};
use super::eigen::{eigensolve, SpectrumResult};
use super::matrix::{assemble, OperatorMatrix};
use crate::error::Result;
use crate::model::PhysicalParams;
use crate::opalg::{bopp_shift, collect_orders, evaluate_coefficients, named, NumericOperatorPolynomial, OperatorPolynomial, Order};

/// Which non-commutativity parameter is varied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Channel {
    Theta,
    Eta,
}

impl Channel {
    pub const BOTH: [Channel; 2] = [Channel::Eta, Channel::Theta];

    /// The `(theta, eta)` order of the linear term.
    pub fn order(self) -> Order {
        match self {
            Channel::Theta => (1, 0),
            Channel::Eta => (0, 1),
        }
    }

    pub fn value(self, p: &PhysicalParams) -> f64 {
        match self {
            Channel::Theta => p.theta,
            Channel::Eta => p.eta,
        }
    }

    /// `p` with this channel set to `value` and the other one switched off.
    pub fn isolate(self, p: &PhysicalParams, value: f64) -> PhysicalParams {
        match self {
            Channel::Theta => PhysicalParams { theta: value, eta: 0.0, ..*p },
            Channel::Eta => PhysicalParams { theta: 0.0, eta: value, ..*p },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Channel::Theta => "theta",
            Channel::Eta => "eta",
        }
    }
}

/// The commutative Hamiltonian after the Bopp shift, kept both whole and
/// split by `(theta, eta)` order.
#[derive(Clone, Debug)]
pub struct ShiftedHamiltonian {
    full: OperatorPolynomial,
    parts: BTreeMap<Order, OperatorPolynomial>,
}

impl Default for ShiftedHamiltonian {
    fn default() -> Self {
        Self::new()
    }
}

impl ShiftedHamiltonian {
    pub fn new() -> Self {
        let full = bopp_shift(&named::hamiltonian());
        let parts = collect_orders(&full);
        Self { full, parts }
    }

    pub fn symbolic(&self) -> &OperatorPolynomial {
        &self.full
    }

    pub fn parts(&self) -> &BTreeMap<Order, OperatorPolynomial> {
        &self.parts
    }

    pub fn part(&self, order: Order) -> OperatorPolynomial {
        self.parts.get(&order).cloned().unwrap_or_default()
    }

    /// All orders at the given parameter values.
    pub fn numeric(&self, params: &PhysicalParams) -> Result<NumericOperatorPolynomial> {
        evaluate_coefficients(&self.full, params)
    }

    pub fn matrix(&self, params: &PhysicalParams, basis: Arc<TruncatedBasis>) -> Result<OperatorMatrix> {
        assemble(&self.numeric(params)?, basis, params)
    }

    /// `alpha^2 H0`, diagonal in the circular basis.
    pub fn unperturbed_matrix(&self, params: &PhysicalParams, basis: Arc<TruncatedBasis>) -> Result<OperatorMatrix> {
        let p = evaluate_coefficients(&self.part((0, 0)), params)?;
        assemble(&p, basis, params)
    }

    /// `dH/d(channel)` at zero non-commutativity.
    pub fn slope_matrix(&self, channel: Channel, params: &PhysicalParams, basis: Arc<TruncatedBasis>) -> Result<OperatorMatrix> {
        let p = evaluate_coefficients(&self.part(channel.order()), params)?;
        assemble(&p, basis, params)
    }
}

/// Exact diagonalisation of the shifted Hamiltonian, all orders included.
pub fn full_spectrum(params: &PhysicalParams, n_xy: u32, n_z: u32) -> Result<SpectrumResult> {
    params.validate()?;
    let basis = Arc::new(enumerate_basis(n_xy, n_z)?);
    let h = ShiftedHamiltonian::new().matrix(params, basis)?;
    eigensolve(&h, false)
}
