use alloc::collections::BTreeMap;

use super::gaussian::GaussianRational;
use super::poly::OperatorPolynomial;
use super::symbols::{Symbol, SymbolExponents};

/// `(theta power, eta power)`.
pub type Order = (i32, i32);

/// Splits `poly` by its `theta` and `eta` exponents. Each part has those two
/// symbols factored out, so `sum theta^j eta^k part(j, k) == poly`.
pub fn collect_orders(poly: &OperatorPolynomial) -> BTreeMap<Order, OperatorPolynomial> {
    let mut parts: BTreeMap<Order, OperatorPolynomial> = BTreeMap::new();
    for m in poly.iter() {
        let key = (m.symbols[Symbol::Theta], m.symbols[Symbol::Eta]);
        let symbols = m.symbols.without(Symbol::Theta).without(Symbol::Eta);
        parts
            .entry(key)
            .or_default()
            .add_term(m.coefficient, symbols, m.ops);
    }
    parts
}

/// Inverse of [`collect_orders`].
pub fn reassemble(parts: &BTreeMap<Order, OperatorPolynomial>) -> OperatorPolynomial {
    parts.iter().fold(OperatorPolynomial::zero(), |acc, (&(j, k), part)| {
        let factor = SymbolExponents::from_pairs(&[(Symbol::Theta, j), (Symbol::Eta, k)]);
        acc + part.scale(&GaussianRational::integer(1), factor)
    })
}
