//! Point action and factorization of motion polynomials into linear factors.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::motion::{DualQuatPoly, MotionPoly};
use crate::poly::{Degree, Poly};
use crate::quat::{DualQuat, Quat};
use crate::quatpoly::QuatPoly;
use crate::roots::poly_roots;
use crate::scalar::{Scalar, Tolerance};

/// Image of the point `(x, y, z)` under `C(t)`.
pub fn act_on_point<S: Scalar>(c: &MotionPoly<S>, point: [S; 3], t: &S) -> Result<[S; 3]> {
    let v = c.inner().eval(t);
    let n = v.primal.norm();
    if n.is_zero() {
        return Err(Error::SingularParameter);
    }
    let x = DualQuat::new(Quat::one(), Quat::vector(point));
    let img = &(&v.eps_conj() * &x) * &v.conj();
    let [a, b, d] = img.dual.vector_part();
    Ok([a.div_ref(&n), b.div_ref(&n), d.div_ref(&n)])
}

/// The linear motion polynomial `t - h`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactor<S> {
    pub h: DualQuat<S>,
}

impl<S: Scalar> LinearFactor<S> {
    pub fn new(h: DualQuat<S>) -> Self {
        LinearFactor { h }
    }

    pub fn polynomial(&self) -> DualQuatPoly<S> {
        DualQuatPoly::linear(&self.h)
    }

    pub fn motion(&self) -> MotionPoly<S> {
        MotionPoly::new_unchecked(self.polynomial())
    }

    /// Primal part of `(t - h) conj(t - h)`.
    pub fn norm(&self) -> Poly<S> {
        self.polynomial().primal.norm()
    }

    /// `u (t - h)`, the same factor with leading coefficient `u`.
    pub fn with_leading(&self, u: &DualQuat<S>) -> DualQuatPoly<S> {
        self.polynomial().mul_left(u)
    }

    /// Revolute axis: the ε-conjugate of `h - conj(h)`, not normalized.
    pub fn axis(&self) -> DualQuat<S> {
        (&self.h - &self.h.conj()).eps_conj()
    }
}

fn check_quadratic<S: Scalar>(f: &Poly<S>) -> Result<()> {
    if f.degree() != Degree::Finite(2) || !f.leading().is_some_and(|l| l.is_one()) {
        return Err(Error::InvalidFactor("expected a monic quadratic"));
    }
    Ok(())
}

/// Writes `C = C_rest (t - h)` with `(t - h) conj(t - h) = f`. The root is
/// read off the remainder `C1 t + C0` of `C` modulo `f` as `h = -C1^-1 C0`.
pub fn extract_right_factor_quadratic<S: Scalar>(
    c: &MotionPoly<S>,
    f: &Poly<S>,
    tol: Tolerance,
) -> Result<(MotionPoly<S>, LinearFactor<S>)> {
    extract_step(c, f, tol, 0)
}

fn extract_step<S: Scalar>(
    c: &MotionPoly<S>,
    f: &Poly<S>,
    tol: Tolerance,
    step: usize,
) -> Result<(MotionPoly<S>, LinearFactor<S>)> {
    check_quadratic(f)?;
    let inner = c.inner();
    let r = DualQuatPoly::new(inner.primal.rem_poly(f)?, inner.dual.rem_poly(f)?);
    let c1 = r.coeff(1);
    let c0 = r.coeff(0);
    let scale = inner.max_abs();
    if !S::EXACT && c1.primal.max_abs() <= tol.abs * scale {
        return Err(Error::NonGenericFactorization { step });
    }
    let inv = c1.inverse().ok_or(Error::NonGenericFactorization { step })?;
    let h = -&(&inv * &c0);
    let factor = LinearFactor::new(h);

    let e = factor.polynomial();
    let norm = &e * &e.conj();
    let primal_res = (&norm.primal - &QuatPoly::real(f.clone())).max_abs();
    let study_res = norm.dual.max_abs();
    if !tol.negligible::<S>(primal_res, f.max_abs()) || !tol.negligible::<S>(study_res, e.primal.max_abs() * e.max_abs()) {
        return Err(Error::InvalidFactor("f is not the norm of a right factor"));
    }
    let (q, rem) = inner.right_divmod(&e)?;
    if !tol.negligible::<S>(rem.max_abs(), scale) {
        return Err(Error::InvalidFactor("f does not divide the norm"));
    }
    // in float mode the quotient inherits the Study residual of `C`
    // amplified by the inverse leading coefficient, so only exact
    // quotients are revalidated
    let rest = if S::EXACT { MotionPoly::new(q)? } else { MotionPoly::new_unchecked(q) };
    Ok((rest, factor))
}

/// Splits `C = f^m Q + ε D` as `(Q + ε K)(f^m + ε F)` with `F` a multiple
/// of `k`. Exact arithmetic only.
pub fn peel_translation_factor<S: Scalar>(
    c: &MotionPoly<S>,
    f: &Poly<S>,
    m: u32,
) -> Result<(MotionPoly<S>, MotionPoly<S>)> {
    if !S::EXACT {
        return Err(Error::UnsupportedMode("peel_translation_factor"));
    }
    if m == 0 || f.degree() < Degree::Finite(1) {
        return Err(Error::Precondition("need a nonconstant f and m >= 1"));
    }
    let fm = f.pow(m);
    let q = c.primal().div_poly_exact(&fm).ok_or(Error::Precondition("f^m does not divide the primal part"))?;
    let qn = q.norm();
    if !qn.gcd(f).is_one() {
        return Err(Error::Precondition("norm of the cofactor is not coprime to f"));
    }
    let (g, w, _) = Poly::ext_gcd(&qn, &fm)?;
    if !g.is_one() {
        return Err(Error::Precondition("norm of the cofactor is not invertible modulo f^m"));
    }
    let d = c.dual();
    let big_f = (&q.conj() * d).scale_poly(&w).rem_poly(&fm)?;
    if !(big_f.w.is_zero() && big_f.x.is_zero() && big_f.y.is_zero()) {
        return Err(Error::Precondition("translation factor is not along k"));
    }
    let k = (d - &(&q * &big_f)).div_poly_exact(&fm).ok_or(Error::Internal("D - Q F is not divisible by f^m"))?;
    let rest = MotionPoly::new(DualQuatPoly::new(q, k))?;
    let e = MotionPoly::new(DualQuatPoly::new(QuatPoly::real(fm), big_f))?;
    if (&rest * &e).inner() != c.inner() {
        return Err(Error::Internal("peeled factors do not multiply back"));
    }
    Ok((rest, e))
}

/// `C = leading * (t - h_1) ... (t - h_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<S> {
    pub leading: DualQuat<S>,
    /// Left to right.
    pub factors: Vec<LinearFactor<S>>,
}

impl<S: Scalar> Factorization<S> {
    pub fn product(&self) -> DualQuatPoly<S> {
        self.factors.iter().fold(DualQuatPoly::constant(&self.leading), |acc, e| &acc * &e.polynomial())
    }
}

/// Peels right factors with norms `order[0]`, `order[1]`, ... from the
/// monic form of `C`; `order[0]` becomes the rightmost factor.
pub fn factor_into_linear<S: Scalar>(
    c: &MotionPoly<S>,
    order: &[Poly<S>],
    tol: Tolerance,
) -> Result<Factorization<S>> {
    let Degree::Finite(n) = c.degree() else {
        return Err(Error::Degenerate("zero motion"));
    };
    if order.len() != n {
        return Err(Error::InvalidInput("need one quadratic per degree"));
    }
    let leading = c.inner().leading();
    let lead_scale = c.inner().max_abs();
    if !S::EXACT && leading.primal.max_abs() <= tol.abs * lead_scale {
        return Err(Error::NonGenericFactorization { step: 0 });
    }
    let inv = leading.inverse().ok_or(Error::NonGenericFactorization { step: 0 })?;
    let mut rest = MotionPoly::new_unchecked(c.inner().mul_left(&inv));
    let mut factors = Vec::with_capacity(n);
    for (step, f) in order.iter().enumerate() {
        let (r, e) = extract_step(&rest, f, tol, step)?;
        rest = r;
        factors.push(e);
    }
    let one = DualQuatPoly::one();
    if !tol.negligible::<S>((rest.inner() - &one).max_abs(), 1.0) {
        return Err(Error::Internal("factorization left a nonconstant remainder"));
    }
    factors.reverse();
    Ok(Factorization { leading, factors })
}

/// Monic real quadratic factors of the primal norm, one per conjugate pair
/// of roots, sorted by the real part of the roots.
pub fn norm_quadratics<S: Scalar>(c: &MotionPoly<S>, tol: Tolerance) -> Result<Vec<Poly<f64>>> {
    let n = c.norm().to_f64().monic();
    let roots = poly_roots(&n)?;
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let eps = libm::sqrt(tol.abs.max(1e-12)) * scale;
    let mut upper: Vec<Complex64> = Vec::new();
    let mut lower: Vec<Complex64> = Vec::new();
    for r in roots {
        if r.im.abs() <= eps {
            return Err(Error::NonGenericFactorization { step: 0 });
        }
        if r.im > 0.0 { upper.push(r) } else { lower.push(r) }
    }
    if upper.len() != lower.len() {
        return Err(Error::NonGenericFactorization { step: 0 });
    }
    let mut pairs = Vec::with_capacity(upper.len());
    for u in upper {
        let (idx, dist) = lower
            .iter()
            .enumerate()
            .map(|(i, l)| (i, (l.conj() - u).norm()))
            .fold((usize::MAX, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
        if dist > eps {
            return Err(Error::NonGenericFactorization { step: 0 });
        }
        let l = lower.swap_remove(idx);
        let z = (u + l.conj()) / 2.0;
        pairs.push(z);
    }
    pairs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(pairs.into_iter().map(|z| Poly::from_coeffs(alloc::vec![z.norm_sqr(), -2.0 * z.re, 1.0])).collect())
}
