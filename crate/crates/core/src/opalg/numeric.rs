use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::poly::OperatorPolynomial;
use super::symbols::{OpExponents, Symbol, SymbolExponents};
use crate::error::{Error, Result};
use crate::model::PhysicalParams;

/// A normal-ordered operator polynomial with floating complex coefficients,
/// one term per operator word.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NumericOperatorPolynomial {
    terms: Vec<(OpExponents, Complex64)>,
}

impl NumericOperatorPolynomial {
    /// Merges like words and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (OpExponents, Complex64)>>(terms: I) -> Self {
        let mut acc: BTreeMap<OpExponents, Complex64> = BTreeMap::new();
        for (ops, c) in terms {
            *acc.entry(ops).or_default() += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| *c != Complex64::new(0.0, 0.0)).collect(),
        }
    }

    /// `self * factor`
    pub fn scaled(&self, factor: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|(o, c)| (*o, c * factor)))
    }

    pub fn terms(&self) -> &[(OpExponents, Complex64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(o, _)| o.degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, ops: OpExponents) -> Complex64 {
        self.terms
            .iter()
            .find(|(o, _)| *o == ops)
            .map(|(_, c)| *c)
            .unwrap_or_default()
    }
}

fn powi(base: f64, exp: i32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        1.0 / acc
    } else {
        acc
    }
}

fn symbol_factor(symbols: &SymbolExponents, params: &PhysicalParams) -> f64 {
    Symbol::ALL
        .iter()
        .map(|&s| powi(params.symbol_value(s), symbols[s]))
        .product()
}

/// Substitutes numeric parameter values into every coefficient. Terms that
/// evaluate to exactly zero are dropped.
pub fn evaluate_coefficients(poly: &OperatorPolynomial, params: &PhysicalParams) -> Result<NumericOperatorPolynomial> {
    if !(params.alpha != 0.0 && params.hbar != 0.0) {
        return Err(Error::NonFiniteCoefficient);
    }
    let mut acc: BTreeMap<OpExponents, Complex64> = BTreeMap::new();
    for ((ops, symbols), c) in poly.terms() {
        let scale = symbol_factor(symbols, params);
        let (re, im) = c.to_f64_pair();
        let value = Complex64::new(re * scale, im * scale);
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::NonFiniteCoefficient);
        }
        *acc.entry(*ops).or_default() += value;
    }
    Ok(NumericOperatorPolynomial::from_terms(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::named::*;
    use crate::opalg::{GaussianRational, Symbol};

    #[test]
    fn i_hbar_with_unit_hbar() {
        let p = OperatorPolynomial::scalar(GaussianRational::i(), SymbolExponents::single(Symbol::Hbar, 1));
        let n = evaluate_coefficients(&p, &PhysicalParams::default()).unwrap();
        assert_eq!(n.terms(), &[(OpExponents::IDENTITY, Complex64::new(0.0, 1.0))]);
    }

    #[test]
    fn zero_theta_prunes_term() {
        use Symbol::*;
        let p = py() * scalar(1, 2, &[(Theta, 1), (Alpha, -1), (Hbar, -1)]);
        let n = evaluate_coefficients(&p, &PhysicalParams::default()).unwrap();
        assert!(n.is_empty());
    }

    #[test]
    fn division_by_zero_symbol_is_an_error() {
        use Symbol::*;
        let p = x() * scalar(1, 1, &[(OmegaC, -1)]);
        let params = PhysicalParams::natural(1.0, 0.0);
        assert_eq!(evaluate_coefficients(&p, &params), Err(Error::NonFiniteCoefficient));
    }

    #[test]
    fn like_words_merge() {
        let n = evaluate_coefficients(&hamiltonian(), &PhysicalParams::natural(3.0, 8.0)).unwrap();
        // m/2 (omega^2 + omega_c^2/4) = 12.5
        assert_eq!(n.coefficient(OpExponents([2, 0, 0, 0, 0, 0])), Complex64::new(12.5, 0.0));
    }
}
