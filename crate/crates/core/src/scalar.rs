//! Coefficient fields.
//!
//! Polynomials are generic over a [`Scalar`]: either an exact rational
//! ([`Rational`], always reduced with positive denominator) or binary64.
//! A polynomial never mixes the two; the type system enforces that.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// True for exact arithmetic. Structural predicates (squarefree parts,
    /// Sturm counts) are only meaningful when this holds.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    /// -1, 0 or 1.
    fn signum_i(&self) -> i8;
    /// Square root inside the field, if there is one.
    fn sqrt_exact(&self) -> Option<Self>;
    fn to_f64(&self) -> f64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn abs_val(&self) -> Self {
        if self.signum_i() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn signum_i(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rational::new(rn, rd))
        } else {
            None
        }
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn signum_i(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(libm::sqrt(*self))
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Comparison tolerance for float mode. Ignored by exact arithmetic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Absolute bound on data normalized to unit max-coefficient.
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-9 }
    }
}

impl Tolerance {
    pub const fn new(abs: f64) -> Self {
        Tolerance { abs }
    }

    /// Whether `residual` is negligible against data of magnitude `scale`.
    pub fn negligible<S: Scalar>(&self, residual: f64, scale: f64) -> bool {
        if S::EXACT {
            residual == 0.0
        } else {
            residual <= self.abs * scale.max(1e-300)
        }
    }
}

/// Parses `"p/q"` or an integer literal into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced_with_positive_denominator() {
        let r = Rational::from_ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rational::from_ratio(9, 4).sqrt_exact(), Some(Rational::from_ratio(3, 2)));
        assert_eq!(Rational::from_i64(2).sqrt_exact(), None);
        assert_eq!(Rational::from_i64(-4).sqrt_exact(), None);
        assert_eq!(4.0f64.sqrt_exact(), Some(2.0));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("-3/6"), Some(Rational::from_ratio(-1, 2)));
        assert_eq!(parse_rational("7"), Some(Rational::from_i64(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
    }
}
