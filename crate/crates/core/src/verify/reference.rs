//! Right-hand sides of the printed expansion identities, entered once by hand
//! and kept separate from the engine. Each function quotes its source
//! expression in LaTeX.

use crate::opalg::named::*;
use crate::opalg::{OperatorPolynomial, Symbol};

use Symbol::{Alpha, Eta, Hbar, Mass, Omega, OmegaC, Theta};

/// ```text
/// \alpha^2 L_z + \frac{\theta}{2\hbar}(-p_x^2 - p_y^2 + p_x p_z + p_y p_z)
///   + \frac{\eta}{2\hbar}(-x^2 - y^2 + x z + y z)
///   + \frac{\theta\eta}{4\alpha^2\hbar^2}(L_x + L_y + L_z)
/// ```
pub fn shifted_lz() -> OperatorPolynomial {
    lz() * scalar(1, 1, &[(Alpha, 2)])
        + momentum_mix() * scalar(1, 2, &[(Theta, 1), (Hbar, -1)])
        + position_mix() * scalar(1, 2, &[(Eta, 1), (Hbar, -1)])
        + l_sum() * scalar(1, 4, &[(Theta, 1), (Eta, 1), (Alpha, -2), (Hbar, -2)])
}

/// ```text
/// \alpha^2(p_x^2 + p_y^2 + p_z^2) - \frac{\eta}{\hbar}(L_x + L_y + L_z)
///   + \frac{\eta^2}{2\alpha^2\hbar^2}(x^2 - x y + y^2 - x z - y z + z^2)
/// ```
pub fn shifted_p_squared() -> OperatorPolynomial {
    p_squared() * scalar(1, 1, &[(Alpha, 2)])
        + l_sum() * scalar(-1, 1, &[(Eta, 1), (Hbar, -1)])
        + position_quadric() * scalar(1, 2, &[(Eta, 2), (Alpha, -2), (Hbar, -2)])
}

/// ```text
/// \alpha^2(x^2 + y^2) + \frac{\theta}{\hbar}(-L_z + (x - y) p_z)
///   + \frac{\theta^2}{4\alpha^2\hbar^2}(p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z)
/// ```
pub fn shifted_rho_squared() -> OperatorPolynomial {
    rho_squared() * scalar(1, 1, &[(Alpha, 2)])
        + planar_theta_term() * scalar(1, 1, &[(Theta, 1), (Hbar, -1)])
        + momentum_quadric() * scalar(1, 4, &[(Theta, 2), (Alpha, -2), (Hbar, -2)])
}

/// ```text
/// \alpha^2 z^2 + \frac{\theta}{\hbar} z (p_y - p_x) + \frac{\theta^2}{4\alpha^2\hbar^2}(p_x - p_y)^2
/// ```
pub fn shifted_z_squared() -> OperatorPolynomial {
    z().pow(2) * scalar(1, 1, &[(Alpha, 2)])
        + z() * (py() - px()) * scalar(1, 1, &[(Theta, 1), (Hbar, -1)])
        + (px() - py()).pow(2) * scalar(1, 4, &[(Theta, 2), (Alpha, -2), (Hbar, -2)])
}

/// ```text
/// H_\eta = -\frac{1}{2m}(L_x + L_y + L_z) - \frac{1}{4}\omega_c(-x^2 - y^2 + x z + y z)
/// ```
pub fn h_eta() -> OperatorPolynomial {
    l_sum() * scalar(-1, 2, &[(Mass, -1)]) + position_mix() * scalar(-1, 4, &[(OmegaC, 1)])
}

/// ```text
/// H_\theta = -\frac{1}{4}\omega_c(-p_x^2 - p_y^2 + p_x p_z + p_y p_z)
///   + \frac{1}{2} m \tilde\omega^2 (-L_z + (x - y) p_z)
///   + \frac{1}{2} m \omega^2 z (p_y - p_x)
/// ```
pub fn h_theta() -> OperatorPolynomial {
    momentum_mix() * scalar(-1, 4, &[(OmegaC, 1)])
        + planar_theta_term() * omega_tilde_squared() * scalar(1, 2, &[(Mass, 1)])
        + z() * (py() - px()) * scalar(1, 2, &[(Mass, 1), (Omega, 2)])
}

/// ```text
/// H_{\eta\theta} = \frac{\omega_c}{8\alpha^2}(L_x + L_y + L_z)
/// ```
pub fn h_eta_theta() -> OperatorPolynomial {
    l_sum() * scalar(1, 8, &[(OmegaC, 1), (Alpha, -2)])
}

/// ```text
/// H_{\eta^2} = \frac{1}{4 m \alpha^2}(x^2 - x y + y^2 - x z - y z + z^2)
/// ```
pub fn h_eta_squared() -> OperatorPolynomial {
    position_quadric() * scalar(1, 4, &[(Mass, -1), (Alpha, -2)])
}

/// ```text
/// H_{\theta^2} = \frac{1}{4\alpha^2}\Big[\frac{1}{2} m \tilde\omega^2
///   (p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z) + \frac{1}{2} m \omega^2 (p_x - p_y)^2\Big]
/// ```
pub fn h_theta_squared() -> OperatorPolynomial {
    let inner = momentum_quadric() * omega_tilde_squared() * scalar(1, 2, &[(Mass, 1)])
        + (px() - py()).pow(2) * scalar(1, 2, &[(Mass, 1), (Omega, 2)]);
    inner * scalar(1, 4, &[(Alpha, -2)])
}

/// `-p_x^2 - p_y^2 + p_x p_z + p_y p_z`
fn momentum_mix() -> OperatorPolynomial {
    -(px().pow(2)) - py().pow(2) + px() * pz() + py() * pz()
}

/// `-x^2 - y^2 + x z + y z`
fn position_mix() -> OperatorPolynomial {
    -(x().pow(2)) - y().pow(2) + x() * z() + y() * z()
}

/// `-L_z + (x - y) p_z`
fn planar_theta_term() -> OperatorPolynomial {
    -lz() + (x() - y()) * pz()
}

/// `x^2 - x y + y^2 - x z - y z + z^2`
fn position_quadric() -> OperatorPolynomial {
    x().pow(2) - x() * y() + y().pow(2) - x() * z() - y() * z() + z().pow(2)
}

/// `p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z`
fn momentum_quadric() -> OperatorPolynomial {
    let two = scalar(2, 1, &[]);
    px().pow(2) + py().pow(2) + pz().pow(2) * two.clone() - px() * pz() * two.clone() - py() * pz() * two
}
