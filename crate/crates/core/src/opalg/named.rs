//! Frequently used operators built from the canonical six.

use super::gaussian::GaussianRational;
use super::poly::OperatorPolynomial;
use super::symbols::{CanonicalOp, Symbol, SymbolExponents};

pub fn x() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::X)
}

pub fn y() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::Y)
}

pub fn z() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::Z)
}

pub fn px() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::Px)
}

pub fn py() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::Py)
}

pub fn pz() -> OperatorPolynomial {
    OperatorPolynomial::op(CanonicalOp::Pz)
}

/// `L_x = y p_z - z p_y`
pub fn lx() -> OperatorPolynomial {
    y() * pz() - z() * py()
}

/// `L_y = z p_x - x p_z`
pub fn ly() -> OperatorPolynomial {
    z() * px() - x() * pz()
}

/// `L_z = x p_y - y p_x`
pub fn lz() -> OperatorPolynomial {
    x() * py() - y() * px()
}

/// `L_x + L_y + L_z`
pub fn l_sum() -> OperatorPolynomial {
    lx() + ly() + lz()
}

pub fn p_squared() -> OperatorPolynomial {
    px().pow(2) + py().pow(2) + pz().pow(2)
}

pub fn rho_squared() -> OperatorPolynomial {
    x().pow(2) + y().pow(2)
}

/// `c * symbols` as a scalar polynomial.
pub fn scalar(num: i64, den: i64, symbols: &[(Symbol, i32)]) -> OperatorPolynomial {
    OperatorPolynomial::scalar(GaussianRational::ratio(num, den), SymbolExponents::from_pairs(symbols))
}

/// `omega^2 + omega_c^2 / 4`, the squared in-plane frequency.
pub fn omega_tilde_squared() -> OperatorPolynomial {
    scalar(1, 1, &[(Symbol::Omega, 2)]) + scalar(1, 4, &[(Symbol::OmegaC, 2)])
}

/// The commutative Hamiltonian in regrouped form,
/// `p^2/2m - (omega_c/2) L_z + (m/2) omega_tilde^2 (x^2+y^2) + (m/2) omega^2 z^2`.
pub fn hamiltonian() -> OperatorPolynomial {
    use Symbol::*;
    p_squared() * scalar(1, 2, &[(Mass, -1)])
        + lz() * scalar(-1, 2, &[(OmegaC, 1)])
        + rho_squared() * omega_tilde_squared() * scalar(1, 2, &[(Mass, 1)])
        + z().pow(2) * scalar(1, 2, &[(Mass, 1), (Omega, 2)])
}

/// The same Hamiltonian written with the symmetric-gauge vector potential,
/// `[(p_x + (m omega_c/2) y)^2 + (p_y - (m omega_c/2) x)^2 + p_z^2]/2m + (m/2) omega^2 r^2`,
/// using `qB/c = m omega_c`.
pub fn hamiltonian_symmetric_gauge() -> OperatorPolynomial {
    use Symbol::*;
    let shift = scalar(1, 2, &[(Mass, 1), (OmegaC, 1)]);
    let kx = px() + y() * shift.clone();
    let ky = py() - x() * shift;
    let kinetic = (kx.pow(2) + ky.pow(2) + pz().pow(2)) * scalar(1, 2, &[(Mass, -1)]);
    let r2 = x().pow(2) + y().pow(2) + z().pow(2);
    kinetic + r2 * scalar(1, 2, &[(Mass, 1), (Omega, 2)])
}
