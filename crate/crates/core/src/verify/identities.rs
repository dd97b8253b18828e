use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use super::reference;
use crate::fock::ShiftedHamiltonian;
use crate::opalg::named::{self, scalar};
use crate::opalg::{
    bopp_shift, collect_orders, i_times, reassemble, tensor_sign, CanonicalOp, GaussianRational, OperatorMonomial, OperatorPolynomial, Order,
    Symbol, SymbolExponents,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
        }
    }
}

/// Whether a check compares the engine with itself (a mismatch is a bug) or
/// with a hand-entered reference expression (a mismatch is data).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Internal,
    Reference,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub kind: CheckKind,
    pub engine: OperatorPolynomial,
    pub reference: OperatorPolynomial,
    /// `engine - reference`
    pub residual: OperatorPolynomial,
    pub status: Status,
}

impl IdentityCheck {
    pub fn new(name: impl ToString, kind: CheckKind, engine: OperatorPolynomial, reference: OperatorPolynomial) -> Self {
        let residual = &engine - &reference;
        let status = if residual.is_zero() { Status::Match } else { Status::Mismatch };
        Self { name: name.to_string(), kind, engine, reference, residual, status }
    }

    pub fn residual_terms(&self) -> Vec<OperatorMonomial> {
        self.residual.iter().collect()
    }

    /// A failed internal check.
    pub fn is_violation(&self) -> bool {
        self.kind == CheckKind::Internal && self.status == Status::Mismatch
    }
}

fn hbar_power(p: &OperatorPolynomial, k: i32) -> OperatorPolynomial {
    p.scale(&GaussianRational::integer(1), SymbolExponents::single(Symbol::Hbar, k))
}

/// The four operator expansions, the six Hamiltonian groups, the
/// symmetric-gauge regrouping of `H0`, and the reassembly identity.
#[allow(clippy::vec_init_then_push)]
pub fn verify_expansion() -> Vec<IdentityCheck> {
    use CheckKind::*;
    let mut out = Vec::new();
    out.push(IdentityCheck::new("L_z", Reference, bopp_shift(&named::lz()), reference::shifted_lz()));
    out.push(IdentityCheck::new("p^2", Reference, bopp_shift(&named::p_squared()), reference::shifted_p_squared()));
    out.push(IdentityCheck::new("x^2+y^2", Reference, bopp_shift(&named::rho_squared()), reference::shifted_rho_squared()));
    out.push(IdentityCheck::new("z^2", Reference, bopp_shift(&named::z().pow(2)), reference::shifted_z_squared()));

    out.push(IdentityCheck::new(
        "H0 symmetric gauge",
        Internal,
        named::hamiltonian_symmetric_gauge(),
        named::hamiltonian(),
    ));

    let ham = ShiftedHamiltonian::new();
    let groups: [(&str, Order, i32, OperatorPolynomial); 6] = [
        ("H_0", (0, 0), 0, named::hamiltonian() * scalar(1, 1, &[(Symbol::Alpha, 2)])),
        ("H_eta", (0, 1), 1, reference::h_eta()),
        ("H_theta", (1, 0), 1, reference::h_theta()),
        ("H_eta_theta", (1, 1), 2, reference::h_eta_theta()),
        ("H_eta^2", (0, 2), 2, reference::h_eta_squared()),
        ("H_theta^2", (2, 0), 2, reference::h_theta_squared()),
    ];
    for (name, order, k, reference) in groups {
        out.push(IdentityCheck::new(name, Reference, hbar_power(&ham.part(order), k), reference));
    }
    let extra: Vec<Order> = ham
        .parts()
        .keys()
        .copied()
        .filter(|o| !matches!(o, (0, 0) | (0, 1) | (1, 0) | (1, 1) | (0, 2) | (2, 0)))
        .collect();
    for order in extra {
        out.push(IdentityCheck::new(
            format!("order theta^{} eta^{}", order.0, order.1),
            Reference,
            ham.part(order),
            OperatorPolynomial::zero(),
        ));
    }

    out.push(IdentityCheck::new(
        "reassembly",
        Internal,
        reassemble(&collect_orders(ham.symbolic())),
        ham.symbolic().clone(),
    ));
    out
}

/// Canonical commutators `[x_i, p_j] = i hbar delta_ij`, and the shifted
/// tables `[x^_i, x^_j] = i theta_ij`, `[p^_i, p^_j] = i eta_ij`,
/// `[x^_i, p^_i] = i (alpha^2 hbar + theta eta / (2 alpha^2 hbar))`.
pub fn verify_commutators() -> Vec<IdentityCheck> {
    use CheckKind::Internal;
    let i_unit = GaussianRational::i();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let xi = OperatorPolynomial::op(CanonicalOp::position(i));
            let pj = OperatorPolynomial::op(CanonicalOp::momentum(j));
            let expected = if i == j { i_hbar() } else { OperatorPolynomial::zero() };
            out.push(IdentityCheck::new(
                format!("[{},{}]", CanonicalOp::position(i).name(), CanonicalOp::momentum(j).name()),
                Internal,
                xi.commutator(&pj),
                expected,
            ));
        }
    }
    for (shift_kind, sym, make) in [
        ("x", Symbol::Theta, CanonicalOp::position as fn(usize) -> CanonicalOp),
        ("p", Symbol::Eta, CanonicalOp::momentum as fn(usize) -> CanonicalOp),
    ] {
        for i in 0..3 {
            for j in 0..3 {
                let a = bopp_shift(&OperatorPolynomial::op(make(i)));
                let b = bopp_shift(&OperatorPolynomial::op(make(j)));
                let sign = tensor_sign(i, j);
                let expected = i_times(sym).scale_rational(sign, 1);
                out.push(IdentityCheck::new(
                    format!("[{}^_{},{}^_{}]", shift_kind, i + 1, shift_kind, j + 1),
                    Internal,
                    a.commutator(&b),
                    expected,
                ));
            }
        }
    }
    for i in 0..3 {
        let a = bopp_shift(&OperatorPolynomial::op(CanonicalOp::position(i)));
        let b = bopp_shift(&OperatorPolynomial::op(CanonicalOp::momentum(i)));
        let expected = scalar(1, 1, &[(Symbol::Alpha, 2), (Symbol::Hbar, 1)])
            + scalar(1, 2, &[(Symbol::Theta, 1), (Symbol::Eta, 1), (Symbol::Alpha, -2), (Symbol::Hbar, -1)]);
        let expected = expected.scale(&i_unit, SymbolExponents::ONE);
        out.push(IdentityCheck::new(format!("[x^_{},p^_{}]", i + 1, i + 1), Internal, a.commutator(&b), expected));
    }
    out
}

fn i_hbar() -> OperatorPolynomial {
    i_times(Symbol::Hbar)
}
