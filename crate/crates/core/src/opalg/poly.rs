use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::symbols::{CanonicalOp, OpExponents, Symbol, SymbolExponents};

/// `coefficient * symbols * ops`, with `ops` in positions-first normal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMonomial {
    pub coefficient: GaussianRational,
    pub symbols: SymbolExponents,
    pub ops: OpExponents,
}

impl OperatorMonomial {
    pub fn new(coefficient: GaussianRational, symbols: SymbolExponents, ops: OpExponents) -> Self {
        Self { coefficient, symbols, ops }
    }
}

/// Rendered as `coefficient*symbols * ops`, e.g. `(1/2)*i*hbar^-1*theta * x^1 p_y^1`.
impl fmt::Display for OperatorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        if !self.symbols.is_one() {
            write!(f, "*{}", self.symbols)?;
        }
        write!(f, " * {}", self.ops)
    }
}

/// Canonical map key: operator word first so that rendering groups by word.
type Key = (OpExponents, SymbolExponents);

/// A normal-ordered polynomial in the canonical operators with exact
/// Gaussian-rational times Laurent-monomial coefficients.
///
/// The representation is canonical: no two terms share a key and no stored
/// coefficient is zero, so `==` is equality of operators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorPolynomial {
    terms: BTreeMap<Key, GaussianRational>,
}

impl OperatorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, SymbolExponents::ONE, OpExponents::IDENTITY)
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::monomial(GaussianRational::one(), SymbolExponents::single(s, 1), OpExponents::IDENTITY)
    }

    /// A coefficient-only term `c * symbols`.
    pub fn scalar(c: GaussianRational, symbols: SymbolExponents) -> Self {
        Self::monomial(c, symbols, OpExponents::IDENTITY)
    }

    pub fn op(op: CanonicalOp) -> Self {
        Self::monomial(GaussianRational::one(), SymbolExponents::ONE, OpExponents::single(op))
    }

    pub fn monomial(c: GaussianRational, symbols: SymbolExponents, ops: OpExponents) -> Self {
        let mut p = Self::zero();
        p.add_term(c, symbols, ops);
        p
    }

    pub fn from_monomials<I: IntoIterator<Item = OperatorMonomial>>(iter: I) -> Self {
        let mut p = Self::zero();
        for m in iter {
            p.add_term(m.coefficient, m.symbols, m.ops);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total operator degree, 0 for scalars and the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(ops, _)| ops.degree()).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = OperatorMonomial> + '_ {
        self.terms
            .iter()
            .map(|((ops, sym), c)| OperatorMonomial::new(c.clone(), *sym, *ops))
    }

    pub fn add_term(&mut self, c: GaussianRational, symbols: SymbolExponents, ops: OpExponents) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((ops, symbols)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c * symbols`.
    pub fn scale(&self, c: &GaussianRational, symbols: SymbolExponents) -> Self {
        let mut out = Self::zero();
        for ((ops, sym), coeff) in &self.terms {
            out.add_term(coeff * c, *sym + symbols, *ops);
        }
        out
    }

    pub fn scale_rational(&self, num: i64, den: i64) -> Self {
        self.scale(&GaussianRational::ratio(num, den), SymbolExponents::ONE)
    }

    /// Normal-ordered product `self * rhs`.
    pub fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((lops, lsym), lc) in &self.terms {
            for ((rops, rsym), rc) in &rhs.terms {
                let c = lc * rc;
                let sym = *lsym + *rsym;
                for (ops, hbar_power, reorder) in reorder_product(lops, rops) {
                    let mut s = sym;
                    s[Symbol::Hbar] += hbar_power;
                    out.add_term(&c * &reorder, s, ops);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.product(rhs) - rhs.product(self)
    }

    /// Hermitian adjoint: each word `x^a p^b` becomes `p^b x^a` with the
    /// conjugate coefficient, then is returned to normal order. Symbols are
    /// real.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for ((ops, sym), c) in &self.terms {
            let moms = OpExponents::from_parts([0; 3], ops.momenta());
            let pos = OpExponents::from_parts(ops.positions(), [0; 3]);
            let c = c.conj();
            for (o, hbar_power, reorder) in reorder_product(&moms, &pos) {
                let mut s = *sym;
                s[Symbol::Hbar] += hbar_power;
                out.add_term(&c * &reorder, s, o);
            }
        }
        out
    }

    /// The part of `self` whose terms have exactly these operator exponents.
    pub fn coefficient_of(&self, ops: OpExponents) -> Self {
        let mut out = Self::zero();
        for ((o, sym), c) in &self.terms {
            if *o == ops {
                out.add_term(c.clone(), *sym, OpExponents::IDENTITY);
            }
        }
        out
    }

    pub(crate) fn terms(&self) -> &BTreeMap<Key, GaussianRational> {
        &self.terms
    }
}

/// Binomial coefficient as a big integer, `k <= n`.
fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Normal-orders `(x^a p^b)(x^c p^d)`. Only the middle `p^b x^c` needs work;
/// per component `p^b x^c = sum_k k! C(b,k) C(c,k) (-i hbar)^k x^(c-k) p^(b-k)`.
/// Returns `(ops, hbar power, numeric factor)` triples.
fn reorder_product(left: &OpExponents, right: &OpExponents) -> Vec<(OpExponents, i32, GaussianRational)> {
    let (a, b) = (left.positions(), left.momenta());
    let (c, d) = (right.positions(), right.momenta());
    let mut acc: Vec<([u32; 3], [u32; 3], i32, BigInt)> = alloc::vec![([0; 3], [0; 3], 0, BigInt::one())];
    for i in 0..3 {
        let kmax = b[i].min(c[i]);
        let mut next = Vec::with_capacity(acc.len() * (kmax as usize + 1));
        for (pos, mom, k_total, w) in &acc {
            for k in 0..=kmax {
                let mut pos = *pos;
                let mut mom = *mom;
                pos[i] = a[i] + c[i] - k;
                mom[i] = b[i] - k + d[i];
                let weight = factorial(k) * binomial(b[i], k) * binomial(c[i], k);
                next.push((pos, mom, k_total + k as i32, w * weight));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(pos, mom, k, w)| {
            // (-i)^k
            let phase = GaussianRational::i_pow(-(k as i64));
            let w = GaussianRational::real(BigRational::from_integer(w));
            (OpExponents::from_parts(pos, mom), k, &phase * &w)
        })
        .collect()
}

impl Add for OperatorPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for ((ops, sym), c) in rhs.terms {
            self.add_term(c, sym, ops);
        }
        self
    }
}

impl<'a> Add<&'a OperatorPolynomial> for &'a OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn add(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for OperatorPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for OperatorPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a OperatorPolynomial> for &'a OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn sub(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.clone() - rhs.clone()
    }
}

impl Mul for OperatorPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<'a> Mul<&'a OperatorPolynomial> for &'a OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn mul(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.product(rhs)
    }
}

/// Terms joined by ` + ` in canonical order; `0` for the zero polynomial.
impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::named::*;
    use alloc::string::ToString;

    fn i_hbar() -> OperatorPolynomial {
        OperatorPolynomial::scalar(GaussianRational::i(), SymbolExponents::single(Symbol::Hbar, 1))
    }

    #[test]
    fn already_normal_ordered() {
        let xp = x().product(&px());
        assert_eq!(xp.len(), 1);
        assert_eq!(xp.to_string(), "1 * x^1 p_x^1");
    }

    #[test]
    fn single_swap() {
        let px_x = px().product(&x());
        assert_eq!(px_x, x().product(&px()) - i_hbar());
    }

    #[test]
    fn canonical_commutators() {
        for i in 0..3 {
            for j in 0..3 {
                let xi = OperatorPolynomial::op(CanonicalOp::position(i));
                let xj = OperatorPolynomial::op(CanonicalOp::position(j));
                let pi = OperatorPolynomial::op(CanonicalOp::momentum(i));
                let pj = OperatorPolynomial::op(CanonicalOp::momentum(j));
                let expected = if i == j { i_hbar() } else { OperatorPolynomial::zero() };
                assert_eq!(xi.commutator(&pj), expected);
                assert!(xi.commutator(&xj).is_zero());
                assert!(pi.commutator(&pj).is_zero());
            }
        }
    }

    #[test]
    fn higher_power_reordering() {
        // [p, x^2] = -2 i hbar x
        let c = px().commutator(&x().pow(2));
        let expected = x().scale(&(-GaussianRational::integer(2) * GaussianRational::i()), SymbolExponents::single(Symbol::Hbar, 1));
        assert_eq!(c, expected);
    }

    #[test]
    fn adjoint_of_x_px() {
        let xp = x().product(&px());
        assert_eq!(xp.adjoint(), xp.clone() - i_hbar());
        assert_eq!(xp.adjoint().adjoint(), xp);
    }

    #[test]
    fn adjoint_conjugates_scalars() {
        assert_eq!(i_hbar().adjoint(), -i_hbar());
    }

    #[test]
    fn zero_terms_are_pruned() {
        let p = x() - x();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }
}
