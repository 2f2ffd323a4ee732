//! Univariate polynomials over a [`Scalar`] field, the ring `R[t]`.

mod sturm;

pub use sturm::{real_roots_f64, sturm_real_root_count, rational_roots, Bound};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients in ascending degree, without trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn monomial(c: S, n: usize) -> Self {
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending integer coefficients.
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// `t - r`.
    pub fn linear_root(r: S) -> Self {
        Self::from_coeffs(vec![-r, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree with the zero polynomial mapped to 0, for bookkeeping where
    /// the distinction does not matter.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn div_scalar(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.div_ref(c)).collect())
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.div_scalar(&lc.clone()),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&S::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn to_f64(&self) -> Poly<f64> {
        self.map(|c| c.to_f64())
    }

    /// Division with remainder: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let lb = b.leading().ok_or(Error::DivisionByZero)?.clone();
        let db = b.deg0();
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![S::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].div_ref(&lb);
            if !c.is_zero() {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    let prod = c.mul_ref(bc);
                    r[k + i] -= &prod;
                }
            }
            // the leading slot cancels by construction; clear float noise
            r[k + db] = S::zero();
            q[k] = c;
        }
        r.truncate(db);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divmod(b)?.1)
    }

    /// Quotient when `b` divides `self` with zero remainder.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.divmod(b).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, b: &Self) -> Self {
        let mut a = self.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, u, v)` with `u a + v b = g`, `g` monic, and the
    /// minimal-degree Bézout pair (`deg u < deg b - deg g`).
    pub fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Precondition("ext_gcd of two zero polynomials"));
        }
        if b.is_zero() {
            let lc = a.leading().unwrap().clone();
            return Ok((a.monic(), Self::constant(S::one() / lc), Self::zero()));
        }
        if a.is_zero() {
            let lc = b.leading().unwrap().clone();
            return Ok((b.monic(), Self::zero(), Self::constant(S::one() / lc)));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        let lc = r0.leading().unwrap().clone();
        let g = r0.div_scalar(&lc);
        let mut u = s0.div_scalar(&lc);
        // canonical pair: reduce u modulo b/g, recompute v from the identity
        let bg = b.div_exact(&g).ok_or(Error::Internal("gcd does not divide input"))?;
        u = u.rem(&bg)?;
        let v = (&g - &(&u * a))
            .div_exact(b)
            .ok_or(Error::Internal("Bézout cofactor not exact"))?;
        Ok((g, u, v))
    }

    /// Exact square root by coefficient matching from the top down.
    ///
    /// Returns the root with positive leading coefficient when `self` is the
    /// square of a polynomial over the field, `None` otherwise. For binary64
    /// the final comparison uses a relative tolerance of `1e-9`.
    pub fn sqrt(&self) -> Option<Self> {
        self.sqrt_with_tolerance(1e-9)
    }

    pub fn sqrt_with_tolerance(&self, rel_tol: f64) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = self.deg0();
        if d % 2 == 1 {
            return None;
        }
        let n = d / 2;
        let top = self.leading()?.sqrt_exact()?;
        let two_top = top.add_ref(&top);
        let mut s = vec![S::zero(); n + 1];
        s[n] = top;
        for k in (0..n).rev() {
            let mut acc = self.coeff(n + k);
            for i in (k + 1)..n {
                let prod = s[i].mul_ref(&s[n + k - i]);
                acc -= &prod;
            }
            s[k] = acc.div_ref(&two_top);
        }
        let root = Self::from_coeffs(s);
        let back = &root * &root;
        if S::EXACT {
            (back == *self).then_some(root)
        } else {
            let scale = self.max_abs();
            ((&back - self).max_abs() <= rel_tol * scale).then_some(root)
        }
    }

    /// Composition `self(a t + b)`.
    pub fn compose_linear(&self, a: &S, b: &S) -> Self {
        let inner = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone());
        }
        acc
    }
}

impl Poly<Rational> {
    /// Yun's square-free decomposition: monic, square-free, pairwise coprime
    /// factors with their multiplicities, `self = lc * prod f_i^m_i`.
    pub fn squarefree_decompose(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::Precondition("square-free decomposition of zero"));
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).ok_or(Error::Internal("gcd division"))?;
        let c = df.div_exact(&a0).ok_or(Error::Internal("gcd division"))?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let nb = b.div_exact(&a).ok_or(Error::Internal("gcd division"))?;
            let nc = d.div_exact(&a).ok_or(Error::Internal("gcd division"))?;
            d = &nc - &nb.derivative();
            b = nb;
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    /// Human form in descending powers, e.g. `t^2-6t+10` or `1/2*t-3/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum_i() < 0;
            let mag = c.abs_val();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag_s = alloc::format!("{mag}");
            let plain = mag_s.bytes().all(|b| b.is_ascii_digit());
            match i {
                0 => f.write_str(&mag_s)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&mag_s)?;
                        if !plain {
                            f.write_str("*")?;
                        }
                    }
                    f.write_str("t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn add_coeffs<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Vec<S> = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        Poly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(S::zero);
            match rhs.coeffs.get(i) {
                Some(b) => out.push(a.sub_ref(b)),
                None => out.push(a),
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.mul_ref(b);
                out[i + j] += &prod;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> { (&self).$m(&rhs) }
        }
        impl<S: Scalar> $tr<&Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: &Poly<S>) -> Poly<S> { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    type P = Poly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn p(cs: &[i64]) -> P {
        P::from_i64s(cs)
    }

    #[test]
    fn zero_degree_is_negative_infinity() {
        assert_eq!(P::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(P::zero().degree() + Degree::Finite(3), Degree::NegInfinity);
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn divmod_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).divmod(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn divmod_examples() {
        // t^2 / t^2
        let (q0, r0) = p(&[0, 0, 1]).divmod(&p(&[0, 0, 1])).unwrap();
        assert!(q0.is_one() && r0.is_zero());
        // (t^3 + 1) / (t + 1) = t^2 - t + 1
        let (q1, r1) = p(&[1, 0, 0, 1]).divmod(&p(&[1, 1])).unwrap();
        assert_eq!(q1, p(&[1, -1, 1]));
        assert!(r1.is_zero());
    }

    #[test]
    fn ext_gcd_examples() {
        let (g, u, v) = P::ext_gcd(&p(&[0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!(g, p(&[0, 1]));
        assert_eq!(&(&u * &p(&[0, 1])) + &(&v * &p(&[0, 1])), g);

        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (g, u, v) = P::ext_gcd(&a, &b).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert!(u.is_zero());
        assert!(v.is_one());

        assert!(P::ext_gcd(&P::zero(), &P::zero()).is_err());
        let (g, u, v) = P::ext_gcd(&p(&[0, 2]), &P::zero()).unwrap();
        assert_eq!(g, p(&[0, 1]));
        assert_eq!(u, P::constant(q(1, 2)));
        assert!(v.is_zero());
    }

    #[test]
    fn squarefree_examples() {
        // t^2
        assert_eq!(p(&[0, 0, 1]).squarefree_decompose().unwrap(), vec![(p(&[0, 1]), 2)]);
        // (t-1)^4 (t-2)^2
        let f = &p(&[-1, 1]).pow(4) * &p(&[-2, 1]).pow(2);
        assert_eq!(f.squarefree_decompose().unwrap(), vec![(p(&[-2, 1]), 2), (p(&[-1, 1]), 4)]);
        // (t^2+1)(t-1)^2(t-2)
        let g = &(&p(&[1, 0, 1]) * &p(&[-1, 1]).pow(2)) * &p(&[-2, 1]);
        let sf = g.squarefree_decompose().unwrap();
        assert_eq!(sf, vec![(&p(&[1, 0, 1]) * &p(&[-2, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(p(&[1, 0, 1]).pow(6).sqrt(), Some(p(&[1, 0, 1]).pow(3)));
        assert_eq!(p(&[1, 0, 1]).pow(3).sqrt(), None);
        assert_eq!(P::constant(q(4, 9)).sqrt(), Some(P::constant(q(2, 3))));
        assert_eq!(P::constant(q(2, 1)).sqrt(), None);
        assert_eq!(p(&[-1, 0, 0]).sqrt(), None);
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(p(&[10, -6, 1]).to_string(), "t^2-6t+10");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::zero().to_string(), "0");
        let h = P::from_coeffs(vec![q(-3, 4), q(1, 2)]);
        assert_eq!(h.to_string(), "1/2*t-3/4");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn float_divmod_clears_leading_slot() {
        let a = Poly::<f64>::from_coeffs(vec![0.3, 0.1, 0.7]);
        let b = Poly::<f64>::from_coeffs(vec![0.1, 0.3]);
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree() < b.degree());
        let back = &(&q * &b) + &r;
        assert!((&back - &a).max_abs() < 1e-15);
    }
}
