//! Lines, line polynomials (rational ruled surfaces) and their structural
//! predicates.

use alloc::format;
use core::fmt;

use crate::error::{Error, Result};
use crate::motion::{DualQuatPoly, MotionPoly};
use crate::poly::{rational_roots, real_roots_f64, sturm_real_root_count, Bound, Degree, Poly};
use crate::quat::{DualQuat, Quat};
use crate::quatpoly::QuatPoly;
use crate::scalar::{Rational, Scalar, Tolerance};

/// A line in homogeneous Plücker coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerLine<S> {
    pub direction: [S; 3],
    pub moment: [S; 3],
}

fn dot<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> S {
    a[0].mul_ref(&b[0]) + a[1].mul_ref(&b[1]) + a[2].mul_ref(&b[2])
}

impl<S: Scalar> PluckerLine<S> {
    pub fn new(direction: [S; 3], moment: [S; 3]) -> Result<Self> {
        Self::with_tolerance(direction, moment, Tolerance::default())
    }

    pub fn with_tolerance(direction: [S; 3], moment: [S; 3], tol: Tolerance) -> Result<Self> {
        if direction.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("line with zero direction"));
        }
        let line = PluckerLine { direction, moment };
        let scale = line.direction_norm_f64() * line.moment_norm_f64();
        if !tol.negligible::<S>(dot(&line.direction, &line.moment).to_f64().abs(), scale) {
            return Err(Error::PluckerViolation);
        }
        Ok(line)
    }

    /// The line `k` through the origin.
    pub fn k() -> Self {
        PluckerLine {
            direction: [S::zero(), S::zero(), S::one()],
            moment: [S::zero(), S::zero(), S::zero()],
        }
    }

    pub fn from_dual_quat(h: &DualQuat<S>) -> Result<Self> {
        if !h.primal.is_vectorial() || !h.dual.is_vectorial() {
            return Err(Error::NotVectorial);
        }
        Self::new(h.primal.vector_part(), h.dual.vector_part())
    }

    pub fn to_dual_quat(&self) -> DualQuat<S> {
        DualQuat::new(Quat::vector(self.direction.clone()), Quat::vector(self.moment.clone()))
    }

    pub fn direction_norm_f64(&self) -> f64 {
        libm::sqrt(self.direction.iter().map(|c| c.to_f64() * c.to_f64()).sum())
    }

    pub fn moment_norm_f64(&self) -> f64 {
        libm::sqrt(self.moment.iter().map(|c| c.to_f64() * c.to_f64()).sum())
    }

    /// Unit direction and matching moment in binary64.
    pub fn normalized_f64(&self) -> PluckerLine<f64> {
        let n = self.direction_norm_f64();
        PluckerLine {
            direction: core::array::from_fn(|i| self.direction[i].to_f64() / n),
            moment: core::array::from_fn(|i| self.moment[i].to_f64() / n),
        }
    }

    /// Distance between the normalized coordinate vectors of two lines,
    /// minimized over the sign ambiguity.
    pub fn proportionality_residual(&self, other: &PluckerLine<S>) -> f64 {
        let a = self.normalized_f64();
        let b = other.normalized_f64();
        let diff = |s: f64| {
            (0..3)
                .map(|i| (a.direction[i] - s * b.direction[i]).abs().max((a.moment[i] - s * b.moment[i]).abs()))
                .fold(0.0, f64::max)
        };
        diff(1.0).min(diff(-1.0))
    }

    /// Closest point of the line to the origin, `direction × moment / |direction|²`.
    pub fn foot_point_f64(&self) -> [f64; 3] {
        let d: [f64; 3] = core::array::from_fn(|i| self.direction[i].to_f64());
        let m: [f64; 3] = core::array::from_fn(|i| self.moment[i].to_f64());
        let n2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        [
            (d[1] * m[2] - d[2] * m[1]) / n2,
            (d[2] * m[0] - d[0] * m[2]) / n2,
            (d[0] * m[1] - d[1] * m[0]) / n2,
        ]
    }
}

impl<S: Scalar> fmt::Display for PluckerLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.direction;
        let [d, e, g] = &self.moment;
        write!(f, "[{a}, {b}, {c} | {d}, {e}, {g}]")
    }
}

/// A rational ruled surface `L = L_p + ε L_d`: vectorial, Plücker condition
/// identically satisfied, `L_p != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinePoly<S> {
    primal: QuatPoly<S>,
    dual: QuatPoly<S>,
}

impl<S: Scalar> LinePoly<S> {
    pub fn new(primal: QuatPoly<S>, dual: QuatPoly<S>) -> Result<Self> {
        validate_line_poly(primal, dual, Tolerance::default())
    }

    pub(crate) fn new_unchecked(primal: QuatPoly<S>, dual: QuatPoly<S>) -> Self {
        LinePoly { primal, dual }
    }

    pub fn primal(&self) -> &QuatPoly<S> {
        &self.primal
    }

    pub fn dual(&self) -> &QuatPoly<S> {
        &self.dual
    }

    pub fn degree(&self) -> Degree {
        self.primal.degree().max(self.dual.degree())
    }

    pub fn as_dual_quat_poly(&self) -> DualQuatPoly<S> {
        DualQuatPoly::new(self.primal.clone(), self.dual.clone())
    }

    /// `L_p conj(L_p)`.
    pub fn norm(&self) -> Poly<S> {
        self.primal.norm()
    }

    pub fn scale(&self, c: &S) -> Self {
        LinePoly::new_unchecked(self.primal.scale(c), self.dual.scale(c))
    }

    pub fn scale_poly(&self, f: &Poly<S>) -> Self {
        LinePoly::new_unchecked(self.primal.scale_poly(f), self.dual.scale_poly(f))
    }

    pub fn div_poly_exact(&self, f: &Poly<S>) -> Option<Self> {
        Some(LinePoly::new_unchecked(self.primal.div_poly_exact(f)?, self.dual.div_poly_exact(f)?))
    }

    /// The ruling at parameter `t`, if `L_p(t) != 0`.
    pub fn eval(&self, t: &S) -> Result<PluckerLine<S>> {
        let p = self.primal.eval(t);
        let d = self.dual.eval(t);
        PluckerLine::with_tolerance(p.vector_part(), d.vector_part(), Tolerance::new(1e-6))
    }

    pub fn to_f64(&self) -> LinePoly<f64> {
        LinePoly::new_unchecked(self.primal.to_f64(), self.dual.to_f64())
    }

    pub fn max_abs(&self) -> f64 {
        self.primal.max_abs().max(self.dual.max_abs())
    }
}

impl<S: Scalar> fmt::Display for LinePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ε[{}]", self.primal, self.dual)
    }
}

/// `L_p conj(L_d) + L_d conj(L_p)`, a real polynomial for vectorial input.
fn plucker_residual<S: Scalar>(p: &QuatPoly<S>, d: &QuatPoly<S>) -> QuatPoly<S> {
    &(p * &d.conj()) + &(d * &p.conj())
}

/// Checks the defining identities of a line polynomial.
pub fn validate_line_poly<S: Scalar>(primal: QuatPoly<S>, dual: QuatPoly<S>, tol: Tolerance) -> Result<LinePoly<S>> {
    if primal.is_zero() {
        return Err(Error::Degenerate("line polynomial with zero primal part"));
    }
    let sp = primal.max_abs();
    let sd = dual.max_abs();
    if !tol.negligible::<S>(primal.w.max_abs(), sp) || !tol.negligible::<S>(dual.w.max_abs(), sp.max(sd)) {
        return Err(Error::NotVectorial);
    }
    let res = plucker_residual(&primal, &dual).max_abs();
    if !tol.negligible::<S>(res, sp * sp.max(sd)) {
        return Err(Error::PluckerViolation);
    }
    Ok(LinePoly { primal, dual })
}

/// Whether `L_p conj(L_p)` is a square; returns its root with positive
/// leading coefficient when it is.
pub fn is_kinematic<S: Scalar>(line: &LinePoly<S>) -> (bool, Option<Poly<S>>) {
    let sigma = line.norm().sqrt();
    (sigma.is_some(), sigma)
}

fn content(line: &LinePoly<Rational>) -> Poly<Rational> {
    line.dual.components().iter().fold(line.primal.rgcd().expect("nonzero primal part"), |g, c| g.gcd(c))
}

/// True when primal and dual content are coprime. A zero dual part counts as
/// content zero, so only `rgcd(L_p) = 1` is reduced then.
pub fn is_reduced(line: &LinePoly<Rational>) -> bool {
    content(line).is_one()
}

/// Divides out the common real content; returns the reduced line and the
/// monic factor removed.
pub fn reduce(line: &LinePoly<Rational>) -> (LinePoly<Rational>, Poly<Rational>) {
    let g = content(line);
    let reduced = line.div_poly_exact(&g).expect("content divides");
    (reduced, g)
}

/// Structure of a kinematic line polynomial relevant for the existence of a
/// motion.
#[derive(Clone, Debug, PartialEq)]
pub struct SaturationReport {
    /// `rgcd(L_p)`.
    pub g: Poly<Rational>,
    /// Minimal saturating factor.
    pub ell: Poly<Rational>,
    /// Square root of `L_p conj(L_p)`.
    pub sigma: Poly<Rational>,
    pub is_kinematic: bool,
    pub is_saturated: bool,
    pub is_reduced: bool,
}

/// Real-rooted part of a monic square-free factor.
fn real_part_of_factor(f: &Poly<Rational>) -> Result<Poly<Rational>> {
    let n_real = sturm_real_root_count(f, &Bound::NegInfinity, &Bound::PosInfinity)?;
    if n_real == 0 {
        return Ok(Poly::one());
    }
    if n_real == f.deg0() {
        return Ok(f.clone());
    }
    let roots = rational_roots(f);
    if roots.len() == n_real {
        return Ok(roots.into_iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear_root(r)));
    }
    let approx = real_roots_f64(f)
        .into_iter()
        .fold(Poly::<f64>::one(), |acc, r| &acc * &Poly::linear_root(r));
    Err(Error::UnsupportedSplitting { factor: format!("{f}"), approx_real: approx.into_coeffs() })
}

/// `g`, the minimal saturating factor `ell` and the flags of a kinematic
/// line polynomial.
pub fn saturation_analysis(line: &LinePoly<Rational>) -> Result<SaturationReport> {
    let (kin, sigma) = is_kinematic(line);
    let sigma = match (kin, sigma) {
        (true, Some(s)) => s,
        _ => return Err(Error::Precondition("saturation analysis of a non-kinematic line polynomial")),
    };
    let g = line.primal.rgcd()?;
    let mut ell = Poly::one();
    for (f, m) in g.squarefree_decompose()? {
        if m % 2 == 1 {
            ell = &ell * &real_part_of_factor(&f)?;
        }
    }
    Ok(SaturationReport {
        is_saturated: ell.is_one(),
        is_reduced: is_reduced(line),
        g,
        ell,
        sigma,
        is_kinematic: true,
    })
}

/// `eps_conj(C) a conj(eps_conj(C))` without any validation.
pub fn line_image<S: Scalar>(c: &DualQuatPoly<S>, axis: &DualQuat<S>) -> DualQuatPoly<S> {
    let e = c.eps_conj();
    &(&e * &DualQuatPoly::constant(axis)) * &e.conj()
}

/// The trajectory of the line `axis` of the moving frame under `C`.
pub fn act_on_line<S: Scalar>(c: &MotionPoly<S>, axis: &PluckerLine<S>) -> Result<LinePoly<S>> {
    let img = line_image(c.inner(), &axis.to_dual_quat());
    validate_line_poly(img.primal, img.dual, Tolerance::default())
        .map_err(|_| Error::Internal("line image is not a line polynomial"))
}
