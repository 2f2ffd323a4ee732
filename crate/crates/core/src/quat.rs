//! Constant quaternions and dual quaternions.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// `w + x i + y j + z k` with `i^2 = j^2 = k^2 = ijk = -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quat<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Quat<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Quat { w, x, y, z }
    }

    pub fn zero() -> Self {
        Quat::new(S::zero(), S::zero(), S::zero(), S::zero())
    }
    pub fn one() -> Self {
        Quat::real(S::one())
    }
    pub fn real(w: S) -> Self {
        Quat::new(w, S::zero(), S::zero(), S::zero())
    }
    pub fn i() -> Self {
        Quat::new(S::zero(), S::one(), S::zero(), S::zero())
    }
    pub fn j() -> Self {
        Quat::new(S::zero(), S::zero(), S::one(), S::zero())
    }
    pub fn k() -> Self {
        Quat::new(S::zero(), S::zero(), S::zero(), S::one())
    }
    pub fn vector(v: [S; 3]) -> Self {
        let [x, y, z] = v;
        Quat::new(S::zero(), x, y, z)
    }
    pub fn from_i64s(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(S::from_i64(w), S::from_i64(x), S::from_i64(y), S::from_i64(z))
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn vector_part(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `q conj(q)`, a real number.
    pub fn norm(&self) -> S {
        let mut n = self.w.mul_ref(&self.w);
        n += &self.x.mul_ref(&self.x);
        n += &self.y.mul_ref(&self.y);
        n += &self.z.mul_ref(&self.z);
        n
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_vectorial(&self) -> bool {
        self.w.is_zero()
    }

    pub fn scale(&self, c: &S) -> Self {
        Quat::new(self.w.mul_ref(c), self.x.mul_ref(c), self.y.mul_ref(c), self.z.mul_ref(c))
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Quat::new(c.w.div_ref(&n), c.x.div_ref(&n), c.y.div_ref(&n), c.z.div_ref(&n)))
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Quat<f64> {
        Quat::new(self.w.to_f64(), self.x.to_f64(), self.y.to_f64(), self.z.to_f64())
    }
}

impl<S: Scalar> Mul for &Quat<S> {
    type Output = Quat<S>;
    fn mul(self, b: &Quat<S>) -> Quat<S> {
        let a = self;
        let w = a.w.mul_ref(&b.w) - a.x.mul_ref(&b.x) - a.y.mul_ref(&b.y) - a.z.mul_ref(&b.z);
        let x = a.w.mul_ref(&b.x) + a.x.mul_ref(&b.w) + a.y.mul_ref(&b.z) - a.z.mul_ref(&b.y);
        let y = a.w.mul_ref(&b.y) - a.x.mul_ref(&b.z) + a.y.mul_ref(&b.w) + a.z.mul_ref(&b.x);
        let z = a.w.mul_ref(&b.z) + a.x.mul_ref(&b.y) - a.y.mul_ref(&b.x) + a.z.mul_ref(&b.w);
        Quat::new(w, x, y, z)
    }
}

impl<S: Scalar> Add for &Quat<S> {
    type Output = Quat<S>;
    fn add(self, b: &Quat<S>) -> Quat<S> {
        Quat::new(self.w.add_ref(&b.w), self.x.add_ref(&b.x), self.y.add_ref(&b.y), self.z.add_ref(&b.z))
    }
}

impl<S: Scalar> Sub for &Quat<S> {
    type Output = Quat<S>;
    fn sub(self, b: &Quat<S>) -> Quat<S> {
        Quat::new(self.w.sub_ref(&b.w), self.x.sub_ref(&b.x), self.y.sub_ref(&b.y), self.z.sub_ref(&b.z))
    }
}

impl<S: Scalar> Neg for &Quat<S> {
    type Output = Quat<S>;
    fn neg(self) -> Quat<S> {
        Quat::new(-self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
}

impl<S: Scalar> Mul for Quat<S> {
    type Output = Quat<S>;
    fn mul(self, b: Quat<S>) -> Quat<S> {
        &self * &b
    }
}

impl<S: Scalar> fmt::Display for Quat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// `p + ε d` with `ε^2 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualQuat<S> {
    pub primal: Quat<S>,
    pub dual: Quat<S>,
}

impl<S: Scalar> DualQuat<S> {
    pub fn new(primal: Quat<S>, dual: Quat<S>) -> Self {
        DualQuat { primal, dual }
    }

    pub fn zero() -> Self {
        DualQuat::new(Quat::zero(), Quat::zero())
    }

    pub fn one() -> Self {
        DualQuat::new(Quat::one(), Quat::zero())
    }

    pub fn conj(&self) -> Self {
        DualQuat::new(self.primal.conj(), self.dual.conj())
    }

    /// ε-conjugate `p - ε d`.
    pub fn eps_conj(&self) -> Self {
        DualQuat::new(self.primal.clone(), -&self.dual)
    }

    /// Inverse, defined when the primal part is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let pi = self.primal.inverse()?;
        let d = -&(&(&pi * &self.dual) * &pi);
        Some(DualQuat::new(pi, d))
    }

    pub fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }

    pub fn scale(&self, c: &S) -> Self {
        DualQuat::new(self.primal.scale(c), self.dual.scale(c))
    }

    /// `(h - conj(h))/2`, the vector part.
    pub fn vector_part(&self) -> Self {
        DualQuat::new(
            Quat::vector(self.primal.vector_part()),
            Quat::vector(self.dual.vector_part()),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.primal.max_abs().max(self.dual.max_abs())
    }

    pub fn to_f64(&self) -> DualQuat<f64> {
        DualQuat::new(self.primal.to_f64(), self.dual.to_f64())
    }
}

impl<S: Scalar> Mul for &DualQuat<S> {
    type Output = DualQuat<S>;
    fn mul(self, b: &DualQuat<S>) -> DualQuat<S> {
        let p = &self.primal * &b.primal;
        let d = &(&self.primal * &b.dual) + &(&self.dual * &b.primal);
        DualQuat::new(p, d)
    }
}

impl<S: Scalar> Add for &DualQuat<S> {
    type Output = DualQuat<S>;
    fn add(self, b: &DualQuat<S>) -> DualQuat<S> {
        DualQuat::new(&self.primal + &b.primal, &self.dual + &b.dual)
    }
}

impl<S: Scalar> Sub for &DualQuat<S> {
    type Output = DualQuat<S>;
    fn sub(self, b: &DualQuat<S>) -> DualQuat<S> {
        DualQuat::new(&self.primal - &b.primal, &self.dual - &b.dual)
    }
}

impl<S: Scalar> Neg for &DualQuat<S> {
    type Output = DualQuat<S>;
    fn neg(self) -> DualQuat<S> {
        DualQuat::new(-&self.primal, -&self.dual)
    }
}

impl<S: Scalar> fmt::Display for DualQuat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ε({})", self.primal, self.dual)
    }
}
