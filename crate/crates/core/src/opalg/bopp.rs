use alloc::vec::Vec;

use super::gaussian::GaussianRational;
use super::named::scalar;
use super::poly::OperatorPolynomial;
use super::symbols::{CanonicalOp, Symbol, SymbolExponents};

/// Sign of the antisymmetric tensor entry `(i, j)`: `+1` for
/// `(0,1), (1,2), (2,0)`, `-1` for their transposes, `0` on the diagonal.
pub fn tensor_sign(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 1) | (1, 2) | (2, 0) => 1,
        (1, 0) | (2, 1) | (0, 2) => -1,
        _ => 0,
    }
}

/// The shifted image of one canonical operator:
/// `x_i -> alpha x_i - (1/(2 alpha hbar)) theta_ij p_j` and
/// `p_i -> alpha p_i + (1/(2 alpha hbar)) eta_ij x_j`.
pub fn shifted(op: CanonicalOp) -> OperatorPolynomial {
    use Symbol::*;
    let i = op.component();
    let mut out = OperatorPolynomial::op(op) * scalar(1, 1, &[(Alpha, 1)]);
    for j in 0..3 {
        let sign = tensor_sign(i, j);
        if sign == 0 {
            continue;
        }
        let term = if op.is_position() {
            OperatorPolynomial::op(CanonicalOp::momentum(j)) * scalar(-sign, 2, &[(Theta, 1), (Alpha, -1), (Hbar, -1)])
        } else {
            OperatorPolynomial::op(CanonicalOp::position(j)) * scalar(sign, 2, &[(Eta, 1), (Alpha, -1), (Hbar, -1)])
        };
        out = out + term;
    }
    out
}

/// Substitutes every canonical factor by its shifted image, multiplying the
/// images in the monomial's own (normal) order.
pub fn bopp_shift(poly: &OperatorPolynomial) -> OperatorPolynomial {
    let images: Vec<OperatorPolynomial> = CanonicalOp::ALL.iter().map(|&op| shifted(op)).collect();
    let mut out = OperatorPolynomial::zero();
    for mono in poly.iter() {
        let mut term = OperatorPolynomial::scalar(mono.coefficient.clone(), mono.symbols);
        for op in mono.ops.factors() {
            term = term.product(&images[op.index()]);
        }
        out = out + term;
    }
    out
}

/// `i * c * symbol` helper for the shifted-commutator tables.
pub fn i_times(symbol: Symbol) -> OperatorPolynomial {
    OperatorPolynomial::scalar(GaussianRational::i(), SymbolExponents::single(symbol, 1))
}
