//! Quaternionic polynomials, the ring `H[t]` with a central indeterminate.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};
use crate::quat::{DualQuat, Quat};
use crate::scalar::Scalar;

/// `w + x i + y j + z k` with polynomial components.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatPoly<S> {
    pub w: Poly<S>,
    pub x: Poly<S>,
    pub y: Poly<S>,
    pub z: Poly<S>,
}

impl<S: Scalar> QuatPoly<S> {
    pub fn new(w: Poly<S>, x: Poly<S>, y: Poly<S>, z: Poly<S>) -> Self {
        QuatPoly { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::real(Poly::zero())
    }

    pub fn one() -> Self {
        Self::real(Poly::one())
    }

    pub fn real(w: Poly<S>) -> Self {
        QuatPoly::new(w, Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn vector(x: Poly<S>, y: Poly<S>, z: Poly<S>) -> Self {
        QuatPoly::new(Poly::zero(), x, y, z)
    }

    pub fn constant(q: &Quat<S>) -> Self {
        QuatPoly::new(
            Poly::constant(q.w.clone()),
            Poly::constant(q.x.clone()),
            Poly::constant(q.y.clone()),
            Poly::constant(q.z.clone()),
        )
    }

    pub fn i() -> Self {
        Self::constant(&Quat::i())
    }
    pub fn j() -> Self {
        Self::constant(&Quat::j())
    }
    pub fn k() -> Self {
        Self::constant(&Quat::k())
    }

    /// `t - h` for a constant quaternion `h`.
    pub fn linear(h: &Quat<S>) -> Self {
        &Self::real(Poly::t()) - &Self::constant(h)
    }

    /// From quaternion coefficients in ascending degree.
    pub fn from_coeffs(cs: &[Quat<S>]) -> Self {
        let comp = |f: fn(&Quat<S>) -> &S| Poly::from_coeffs(cs.iter().map(|q| f(q).clone()).collect());
        QuatPoly::new(comp(|q| &q.w), comp(|q| &q.x), comp(|q| &q.y), comp(|q| &q.z))
    }

    /// Quaternion coefficients in ascending degree, `degree + 1` entries.
    pub fn coeffs(&self) -> Vec<Quat<S>> {
        match self.degree() {
            Degree::NegInfinity => Vec::new(),
            Degree::Finite(d) => (0..=d).map(|n| self.coeff(n)).collect(),
        }
    }

    pub fn coeff(&self, n: usize) -> Quat<S> {
        Quat::new(self.w.coeff(n), self.x.coeff(n), self.y.coeff(n), self.z.coeff(n))
    }

    pub fn components(&self) -> [&Poly<S>; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn degree(&self) -> Degree {
        self.components().iter().map(|p| p.degree()).max().unwrap()
    }

    pub fn deg0(&self) -> usize {
        self.components().iter().map(|p| p.deg0()).max().unwrap()
    }

    pub fn leading(&self) -> Quat<S> {
        self.coeff(self.deg0())
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|p| p.is_zero())
    }

    pub fn is_vectorial(&self) -> bool {
        self.w.is_zero()
    }

    /// True when all imaginary components vanish.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuatPoly::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `P conj(P)` as a real polynomial.
    pub fn norm(&self) -> Poly<S> {
        let mut n = &self.w * &self.w;
        for c in [&self.x, &self.y, &self.z] {
            n = &n + &(c * c);
        }
        n
    }

    pub fn map_components(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        QuatPoly::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_components(|p| p.scale(c))
    }

    pub fn div_scalar(&self, c: &S) -> Self {
        self.map_components(|p| p.div_scalar(c))
    }

    /// Multiplication by a real polynomial.
    pub fn scale_poly(&self, f: &Poly<S>) -> Self {
        self.map_components(|p| p * f)
    }

    /// Exact division by a real polynomial.
    pub fn div_poly_exact(&self, f: &Poly<S>) -> Option<Self> {
        Some(QuatPoly::new(
            self.w.div_exact(f)?,
            self.x.div_exact(f)?,
            self.y.div_exact(f)?,
            self.z.div_exact(f)?,
        ))
    }

    /// Component-wise remainder modulo a real polynomial.
    pub fn rem_poly(&self, f: &Poly<S>) -> Result<Self> {
        Ok(QuatPoly::new(self.w.rem(f)?, self.x.rem(f)?, self.y.rem(f)?, self.z.rem(f)?))
    }

    /// Greatest real (monic) common divisor of the four components.
    pub fn rgcd(&self) -> Result<Poly<S>> {
        if self.is_zero() {
            return Err(Error::Precondition("rgcd of the zero polynomial"));
        }
        Ok(self.components().iter().fold(Poly::zero(), |g, c| g.gcd(c)))
    }

    pub fn eval(&self, t: &S) -> Quat<S> {
        Quat::new(self.w.eval(t), self.x.eval(t), self.y.eval(t), self.z.eval(t))
    }

    pub fn mul_quat_left(&self, q: &Quat<S>) -> Self {
        &Self::constant(q) * self
    }

    pub fn mul_quat_right(&self, q: &Quat<S>) -> Self {
        self * &Self::constant(q)
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|p| p.max_abs()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> QuatPoly<f64> {
        QuatPoly::new(self.w.to_f64(), self.x.to_f64(), self.y.to_f64(), self.z.to_f64())
    }

    /// Right division `self = q * b + r` with `deg r < deg b`.
    pub fn right_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let (q, r) = right_divmod(&self.coeffs(), &b.coeffs())?;
        Ok((Self::from_coeffs(&q), Self::from_coeffs(&r)))
    }

    /// Left division `self = b * q + r` with `deg r < deg b`.
    pub fn left_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let (q, r) = left_divmod(&self.coeffs(), &b.coeffs())?;
        Ok((Self::from_coeffs(&q), Self::from_coeffs(&r)))
    }

    /// Greatest common right divisor, normalized to leading coefficient one.
    pub fn right_gcd(&self, b: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.right_divmod(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let inv = a.leading().inverse().ok_or(Error::Internal("zero leading coefficient"))?;
        Ok(a.mul_quat_left(&inv))
    }
}

/// Coefficient rings for the generic one-sided polynomial division.
pub(crate) trait Coeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;
}

impl<S: Scalar> Coeff for Quat<S> {
    fn zero() -> Self {
        Quat::zero()
    }
    fn is_zero(&self) -> bool {
        Quat::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn inverse(&self) -> Option<Self> {
        Quat::inverse(self)
    }
}

impl<S: Scalar> Coeff for DualQuat<S> {
    fn zero() -> Self {
        DualQuat::zero()
    }
    fn is_zero(&self) -> bool {
        DualQuat::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn inverse(&self) -> Option<Self> {
        DualQuat::inverse(self)
    }
}

fn trim<C: Coeff>(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn divmod_impl<C: Coeff>(a: &[C], b: &[C], right: bool) -> Result<(Vec<C>, Vec<C>)> {
    let b = trim(b.to_vec());
    let lb = b.last().ok_or(Error::DivisionByZero)?;
    let inv = lb.inverse().ok_or(Error::Precondition("leading coefficient of divisor not invertible"))?;
    let db = b.len() - 1;
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = alloc::vec![C::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = if right { r[k + db].mul(&inv) } else { inv.mul(&r[k + db]) };
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let prod = if right { c.mul(bc) } else { bc.mul(&c) };
                r[k + i] = r[k + i].sub(&prod);
            }
        }
        r[k + db] = C::zero();
        q[k] = c;
    }
    r.truncate(db);
    Ok((trim(q), trim(r)))
}

/// `a = q * b + r`.
pub(crate) fn right_divmod<C: Coeff>(a: &[C], b: &[C]) -> Result<(Vec<C>, Vec<C>)> {
    divmod_impl(a, b, true)
}

/// `a = b * q + r`.
pub(crate) fn left_divmod<C: Coeff>(a: &[C], b: &[C]) -> Result<(Vec<C>, Vec<C>)> {
    divmod_impl(a, b, false)
}

impl<S: Scalar> Mul for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn mul(self, b: &QuatPoly<S>) -> QuatPoly<S> {
        let a = self;
        let w = &(&(&a.w * &b.w) - &(&a.x * &b.x)) - &(&(&a.y * &b.y) + &(&a.z * &b.z));
        let x = &(&(&a.w * &b.x) + &(&a.x * &b.w)) + &(&(&a.y * &b.z) - &(&a.z * &b.y));
        let y = &(&(&a.w * &b.y) - &(&a.x * &b.z)) + &(&(&a.y * &b.w) + &(&a.z * &b.x));
        let z = &(&(&a.w * &b.z) + &(&a.x * &b.y)) - &(&(&a.y * &b.x) - &(&a.z * &b.w));
        QuatPoly::new(w, x, y, z)
    }
}

impl<S: Scalar> Add for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn add(self, b: &QuatPoly<S>) -> QuatPoly<S> {
        QuatPoly::new(&self.w + &b.w, &self.x + &b.x, &self.y + &b.y, &self.z + &b.z)
    }
}

impl<S: Scalar> Sub for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn sub(self, b: &QuatPoly<S>) -> QuatPoly<S> {
        QuatPoly::new(&self.w - &b.w, &self.x - &b.x, &self.y - &b.y, &self.z - &b.z)
    }
}

impl<S: Scalar> Neg for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn neg(self) -> QuatPoly<S> {
        self.map_components(|p| -p)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Scalar> $tr for QuatPoly<S> {
            type Output = QuatPoly<S>;
            fn $m(self, rhs: QuatPoly<S>) -> QuatPoly<S> { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<S: Scalar> Neg for QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn neg(self) -> QuatPoly<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for QuatPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, unit) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{p}")?;
            } else {
                write!(f, "({p}){unit}")?;
            }
        }
        Ok(())
    }
}
