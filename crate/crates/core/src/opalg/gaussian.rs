//! Exact complex numbers with rational real and imaginary parts.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    /// `num / den` as a real number. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

/// Renders `3`, `(1/2)`, `(-1/2)*i`, `i`, `-i` or `((1/2)+(3/4)*i)`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = BigRational::one();
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write_rational(f, &self.re),
            (true, false) => {
                if self.im == unit {
                    f.write_str("i")
                } else if self.im == -unit {
                    f.write_str("-i")
                } else {
                    write_rational(f, &self.im)?;
                    f.write_str("*i")
                }
            }
            (false, false) => {
                f.write_str("(")?;
                write_rational(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                write_rational(f, &self.im.abs())?;
                f.write_str("*i)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, -GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn ratios_are_reduced() {
        assert_eq!(GaussianRational::ratio(2, 4), GaussianRational::ratio(-1, -2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::ratio(1, 2).to_string(), "(1/2)");
        assert_eq!(GaussianRational::integer(-3).to_string(), "-3");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        let half_i = &GaussianRational::ratio(1, 2) * &GaussianRational::i();
        assert_eq!(half_i.to_string(), "(1/2)*i");
        let mixed = GaussianRational::one() + (-half_i);
        assert_eq!(mixed.to_string(), "(1-(1/2)*i)");
    }
}
