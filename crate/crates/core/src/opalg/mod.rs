//! Exact algebra of normal-ordered polynomials in `x, y, z, p_x, p_y, p_z`.
//!
//! Normal order puts every position factor left of every momentum factor,
//! components ordered `x < y < z` within each group, so each operator has a
//! unique representation and equality is structural. Products are reordered
//! with `[x_i, p_j] = i hbar delta_ij`.

mod bopp;
mod gaussian;
pub mod named;
mod numeric;
mod orders;
mod poly;
mod symbols;

pub use bopp::{bopp_shift, i_times, shifted, tensor_sign};
pub use gaussian::GaussianRational;
pub use numeric::{evaluate_coefficients, NumericOperatorPolynomial};
pub use orders::{collect_orders, reassemble, Order};
pub use poly::{OperatorMonomial, OperatorPolynomial};
pub use symbols::{CanonicalOp, OpExponents, Symbol, SymbolExponents};

/// `a * b` in normal order.
pub fn poly_mul(a: &OperatorPolynomial, b: &OperatorPolynomial) -> OperatorPolynomial {
    a.product(b)
}

pub fn commutator(a: &OperatorPolynomial, b: &OperatorPolynomial) -> OperatorPolynomial {
    a.commutator(b)
}

pub fn adjoint(a: &OperatorPolynomial) -> OperatorPolynomial {
    a.adjoint()
}
