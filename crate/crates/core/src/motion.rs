//! Dual quaternionic polynomials and motion polynomials.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};
use crate::quat::{DualQuat, Quat};
use crate::quatpoly::{self, QuatPoly};
use crate::scalar::{Scalar, Tolerance};

/// `P + ε D` with quaternionic polynomial parts.
#[derive(Clone, Debug, PartialEq)]
pub struct DualQuatPoly<S> {
    pub primal: QuatPoly<S>,
    pub dual: QuatPoly<S>,
}

impl<S: Scalar> DualQuatPoly<S> {
    pub fn new(primal: QuatPoly<S>, dual: QuatPoly<S>) -> Self {
        DualQuatPoly { primal, dual }
    }

    pub fn zero() -> Self {
        DualQuatPoly::new(QuatPoly::zero(), QuatPoly::zero())
    }

    pub fn one() -> Self {
        DualQuatPoly::new(QuatPoly::one(), QuatPoly::zero())
    }

    pub fn constant(h: &DualQuat<S>) -> Self {
        DualQuatPoly::new(QuatPoly::constant(&h.primal), QuatPoly::constant(&h.dual))
    }

    /// `t - h`.
    pub fn linear(h: &DualQuat<S>) -> Self {
        DualQuatPoly::new(QuatPoly::linear(&h.primal), -&QuatPoly::constant(&h.dual))
    }

    pub fn from_coeffs(cs: &[DualQuat<S>]) -> Self {
        let p: Vec<Quat<S>> = cs.iter().map(|c| c.primal.clone()).collect();
        let d: Vec<Quat<S>> = cs.iter().map(|c| c.dual.clone()).collect();
        DualQuatPoly::new(QuatPoly::from_coeffs(&p), QuatPoly::from_coeffs(&d))
    }

    pub fn coeffs(&self) -> Vec<DualQuat<S>> {
        match self.degree() {
            Degree::NegInfinity => Vec::new(),
            Degree::Finite(d) => (0..=d).map(|n| self.coeff(n)).collect(),
        }
    }

    pub fn coeff(&self, n: usize) -> DualQuat<S> {
        DualQuat::new(self.primal.coeff(n), self.dual.coeff(n))
    }

    pub fn leading(&self) -> DualQuat<S> {
        self.coeff(self.deg0())
    }

    pub fn degree(&self) -> Degree {
        self.primal.degree().max(self.dual.degree())
    }

    pub fn deg0(&self) -> usize {
        self.primal.deg0().max(self.dual.deg0())
    }

    pub fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }

    pub fn conj(&self) -> Self {
        DualQuatPoly::new(self.primal.conj(), self.dual.conj())
    }

    pub fn eps_conj(&self) -> Self {
        DualQuatPoly::new(self.primal.clone(), -&self.dual)
    }

    /// Dual part of `C conj(C)`, i.e. `P conj(D) + D conj(P)`.
    pub fn study_residual(&self) -> QuatPoly<S> {
        &(&self.primal * &self.dual.conj()) + &(&self.dual * &self.primal.conj())
    }

    pub fn scale(&self, c: &S) -> Self {
        DualQuatPoly::new(self.primal.scale(c), self.dual.scale(c))
    }

    pub fn scale_poly(&self, f: &Poly<S>) -> Self {
        DualQuatPoly::new(self.primal.scale_poly(f), self.dual.scale_poly(f))
    }

    pub fn div_scalar(&self, c: &S) -> Self {
        DualQuatPoly::new(self.primal.div_scalar(c), self.dual.div_scalar(c))
    }

    pub fn mul_left(&self, h: &DualQuat<S>) -> Self {
        &Self::constant(h) * self
    }

    pub fn mul_right(&self, h: &DualQuat<S>) -> Self {
        self * &Self::constant(h)
    }

    pub fn eval(&self, t: &S) -> DualQuat<S> {
        DualQuat::new(self.primal.eval(t), self.dual.eval(t))
    }

    pub fn max_abs(&self) -> f64 {
        self.primal.max_abs().max(self.dual.max_abs())
    }

    pub fn to_f64(&self) -> DualQuatPoly<f64> {
        DualQuatPoly::new(self.primal.to_f64(), self.dual.to_f64())
    }

    /// Right division `self = q * b + r`; needs an invertible leading
    /// coefficient of `b`.
    pub fn right_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let (q, r) = quatpoly::right_divmod(&self.coeffs(), &b.coeffs())?;
        Ok((Self::from_coeffs(&q), Self::from_coeffs(&r)))
    }
}

impl<S: Scalar> Mul for &DualQuatPoly<S> {
    type Output = DualQuatPoly<S>;
    fn mul(self, b: &DualQuatPoly<S>) -> DualQuatPoly<S> {
        let p = &self.primal * &b.primal;
        let d = &(&self.primal * &b.dual) + &(&self.dual * &b.primal);
        DualQuatPoly::new(p, d)
    }
}

impl<S: Scalar> Add for &DualQuatPoly<S> {
    type Output = DualQuatPoly<S>;
    fn add(self, b: &DualQuatPoly<S>) -> DualQuatPoly<S> {
        DualQuatPoly::new(&self.primal + &b.primal, &self.dual + &b.dual)
    }
}

impl<S: Scalar> Sub for &DualQuatPoly<S> {
    type Output = DualQuatPoly<S>;
    fn sub(self, b: &DualQuatPoly<S>) -> DualQuatPoly<S> {
        DualQuatPoly::new(&self.primal - &b.primal, &self.dual - &b.dual)
    }
}

impl<S: Scalar> Neg for &DualQuatPoly<S> {
    type Output = DualQuatPoly<S>;
    fn neg(self) -> DualQuatPoly<S> {
        DualQuatPoly::new(-&self.primal, -&self.dual)
    }
}

impl<S: Scalar> fmt::Display for DualQuatPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ε[{}]", self.primal, self.dual)
    }
}

/// A dual quaternionic polynomial with nonzero primal part that satisfies
/// the Study condition `P conj(D) + D conj(P) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionPoly<S> {
    inner: DualQuatPoly<S>,
}

impl<S: Scalar> MotionPoly<S> {
    /// Validates exactly in rational mode and to the default tolerance in
    /// float mode.
    pub fn new(inner: DualQuatPoly<S>) -> Result<Self> {
        Self::with_tolerance(inner, Tolerance::default())
    }

    pub fn with_tolerance(inner: DualQuatPoly<S>, tol: Tolerance) -> Result<Self> {
        if inner.primal.is_zero() {
            return Err(Error::Degenerate("motion polynomial with zero primal part"));
        }
        let res = inner.study_residual().max_abs();
        let scale = inner.primal.max_abs() * inner.max_abs();
        if !tol.negligible::<S>(res, scale) {
            return Err(Error::InvalidInput("Study condition violated"));
        }
        Ok(MotionPoly { inner })
    }

    pub fn from_parts(primal: QuatPoly<S>, dual: QuatPoly<S>) -> Result<Self> {
        Self::new(DualQuatPoly::new(primal, dual))
    }

    /// The identity motion `1`.
    pub fn identity() -> Self {
        MotionPoly { inner: DualQuatPoly::one() }
    }

    /// Skips validation; callers guarantee the Study condition.
    pub(crate) fn new_unchecked(inner: DualQuatPoly<S>) -> Self {
        MotionPoly { inner }
    }

    pub fn primal(&self) -> &QuatPoly<S> {
        &self.inner.primal
    }

    pub fn dual(&self) -> &QuatPoly<S> {
        &self.inner.dual
    }

    pub fn inner(&self) -> &DualQuatPoly<S> {
        &self.inner
    }

    pub fn into_inner(self) -> DualQuatPoly<S> {
        self.inner
    }

    pub fn degree(&self) -> Degree {
        self.inner.degree()
    }

    /// The real polynomial `C conj(C)`.
    pub fn norm(&self) -> Poly<S> {
        self.inner.primal.norm()
    }

    pub fn conj(&self) -> Self {
        MotionPoly { inner: self.inner.conj() }
    }

    pub fn eps_conj(&self) -> DualQuatPoly<S> {
        self.inner.eps_conj()
    }

    pub fn to_f64(&self) -> MotionPoly<f64> {
        MotionPoly { inner: self.inner.to_f64() }
    }
}

impl<S: Scalar> Mul for &MotionPoly<S> {
    type Output = MotionPoly<S>;
    fn mul(self, b: &MotionPoly<S>) -> MotionPoly<S> {
        MotionPoly { inner: &self.inner * &b.inner }
    }
}

impl<S: Scalar> fmt::Display for MotionPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
