//! Dual part, assembly and verification of minimal-degree motions.

use crate::error::{Error, Result};
use crate::line::{is_kinematic, line_image, reduce, saturation_analysis, LinePoly};
use crate::motion::{DualQuatPoly, MotionPoly};
use crate::poly::{Degree, Poly};
use crate::primal::{build_primal_part, rotate_problem, RotationSchedule, MAX_ROTATIONS};
use crate::quat::{DualQuat, Quat};
use crate::quatpoly::QuatPoly;
use crate::scalar::{Rational, Scalar, Tolerance};

type P = Poly<Rational>;
type QP = QuatPoly<Rational>;

/// `-Q k conj(D) - D k conj(Q)`.
pub fn dual_operator<S: Scalar>(q: &QuatPoly<S>, d: &QuatPoly<S>) -> QuatPoly<S> {
    let k = QuatPoly::k();
    -&(&(&(q * &k) * &d.conj()) + &(&(d * &k) * &q.conj()))
}

/// Solves `-Q k conj(D) - D k conj(Q) = K_d` with the closed formulas.
///
/// Needs `q3 != 0`, `m3 != 0` and `gcd(q0, q3) = 1`, where `m = Q k conj(Q)`.
pub fn dual_part_raw(q: &QP, kd: &QP) -> Result<QP> {
    Ok(dual_part_traced(q, kd)?.0)
}

/// As [`dual_part_raw`], also returning the Bézout pair `(a, b)` with
/// `a q0 + b q3 = 1`.
pub(crate) fn dual_part_traced(q: &QP, kd: &QP) -> Result<(QP, P, P)> {
    if !kd.is_vectorial() {
        return Err(Error::NotVectorial);
    }
    let (q0, q1, q2, q3) = (&q.w, &q.x, &q.y, &q.z);
    if q3.is_zero() {
        return Err(Error::Genericity("q3 = 0"));
    }
    let m = &(q * &QP::k()) * &q.conj();
    let (m1, m2, m3) = (&m.x, &m.y, &m.z);
    if m3.is_zero() {
        return Err(Error::Genericity("m3 = 0"));
    }
    let (g, a, b) = P::ext_gcd(q0, q3)?;
    if !g.is_one() {
        return Err(Error::Genericity("gcd(q0, q3) != 1"));
    }
    let (k5, k6, k7) = (&kd.x, &kd.y, &kd.z);
    if !(&(&(m1 * k5) + &(m2 * k6)) + &(m3 * k7)).is_zero() {
        return Err(Error::InvalidInput("dual target violates the Plücker relation"));
    }
    if kd.is_zero() {
        return Ok((QP::zero(), a, b));
    }
    let quarter = Rational::from_ratio(1, 4);
    let d0 = -&(k7 * &a).scale(&quarter);
    let d3 = -&(&b * k7).scale(&quarter);
    let two_m3 = m3.scale(&Rational::from_i64(2));
    let q1q2 = q1 * q2;
    let (q1s, q2s) = (q1 * q1, q2 * q2);
    let n1 = &(k5 * &(&(&(&b * &q2s) - &(&a * &q1q2)) - q3)) + &(k6 * &(&(&-&(&b * &q1q2) - &(&a * &q2s)) + q0));
    let n2 = &(k5 * &(&(&-&(&b * &q1q2) + &(&a * &q1s)) - q0)) + &(k6 * &(&(&(&b * &q1s) + &(&a * &q1q2)) - q3));
    let d1 = n1.div_exact(&two_m3).ok_or(Error::Internal("2 m3 does not divide the d1 numerator"))?;
    let d2 = n2.div_exact(&two_m3).ok_or(Error::Internal("2 m3 does not divide the d2 numerator"))?;
    let d = QP::new(d0, d1, d2, d3);
    if dual_operator(q, &d) != *kd {
        return Err(Error::Internal("closed-form dual part does not solve the dual equation"));
    }
    Ok((d, a, b))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeReduction {
    pub d: QP,
    pub lambda: P,
    pub rho: P,
}

/// Replaces `D` by `D + lambda Q k` with `d0 = lambda q3 + rho`, bringing
/// the degree down to at most `target_deg`.
pub fn reduce_degree(d: &QP, q: &QP, target_deg: usize) -> Result<DegreeReduction> {
    let qk = QP::new(-&q.z, q.y.clone(), -&q.x, q.w.clone());
    if !q.z.is_zero() {
        let (lambda, rho) = d.w.divmod(&q.z)?;
        let reduced = d + &qk.scale_poly(&lambda);
        if reduced.degree() <= Degree::Finite(target_deg) {
            return Ok(DegreeReduction { d: reduced, lambda, rho });
        }
    }
    // q3 is too short to cancel the top of D; divide a component of Q k that is not
    let (dc, qc) = [(&d.x, &qk.x), (&d.y, &qk.y), (&d.z, &qk.z)]
        .into_iter()
        .find(|(_, qc)| qc.degree() == q.degree())
        .ok_or(Error::Internal("Q has no component of full degree"))?;
    let (quot, rho) = dc.divmod(qc)?;
    let lambda = -&quot;
    let reduced = d + &qk.scale_poly(&lambda);
    if reduced.degree() > Degree::Finite(target_deg) {
        return Err(Error::Internal("dual part exceeds the primal degree after reduction"));
    }
    Ok(DegreeReduction { d: reduced, lambda, rho })
}

#[derive(Clone, Debug, Default)]
pub struct SynthesisOptions {
    /// Use this `Q` instead of solving the primal equation.
    pub inject_q: Option<QP>,
    /// Seed of the pseudo-random tail of the rotation schedule.
    pub seed: u64,
}

/// Intermediate values of the dual-part computation, in the frame where it
/// ran.
#[derive(Clone, Debug, PartialEq)]
pub struct DualTrace {
    pub a: P,
    pub b: P,
    pub raw: QP,
    pub lambda: P,
    pub rho: P,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthesisResult {
    pub motion: MotionPoly<Rational>,
    /// Real cofactor `h = ell rgcd(L_p)`.
    pub h: P,
    /// Positive constant with `eps_conj(C) k conj(eps_conj(C)) = c h L`.
    pub c: Rational,
    pub ell: P,
    /// Bound on the degree of the free translation polynomial.
    pub family_translation_degree: usize,
    pub rotation_applied: Quat<Rational>,
    /// `P / h`.
    pub primal_cofactor: QP,
    /// Content removed when reducing the input.
    pub removed: P,
    /// The reduced, saturated line `ell L` that `C` generates.
    pub line: LinePoly<Rational>,
    pub trace: DualTrace,
}

fn square_free_constant(c: Rational) -> (Rational, Option<Rational>) {
    match c.sqrt_exact() {
        Some(r) => (Rational::one(), Some(r)),
        None => (c, None),
    }
}

/// Minimal-degree motion polynomial whose `k`-axis sweeps the ruled surface.
pub fn synthesize(line: &LinePoly<Rational>, opts: &SynthesisOptions) -> Result<SynthesisResult> {
    if !is_kinematic(line).0 {
        return Err(Error::NotKinematic);
    }
    let (reduced, removed) = reduce(line);
    if reduced.dual().degree() > reduced.primal().degree() {
        return Err(Error::Precondition("dual part of higher degree than primal part"));
    }
    let report = saturation_analysis(&reduced)?;
    let attempts = if opts.inject_q.is_some() { 1 } else { MAX_ROTATIONS };
    for u in RotationSchedule::new(opts.seed).take(attempts) {
        let rotated = rotate_problem(&reduced, &u)?;
        let part = build_primal_part(&rotated, &report, opts.inject_q.as_ref(), RotationSchedule::new(opts.seed))?;
        let q = &part.solution.q;
        // a right unit v = 1 + k repairs q3 = 0 without changing the motion
        let repair = q.z.is_zero() && !q.w.is_zero() && opts.inject_q.is_none();
        let v = if repair { Quat::from_i64s(1, 0, 0, 1) } else { Quat::one() };
        let qv = q.mul_quat_right(&v);
        let kd = part.line.dual().scale(&(&part.solution.c * &v.norm()));
        let (raw, a, b) = match dual_part_traced(&qv, &kd) {
            Ok(v) => v,
            Err(Error::Genericity(_)) => continue,
            Err(e) => return Err(e),
        };
        let red = reduce_degree(&raw, &qv, part.p.deg0())?;
        let d = red.d.mul_quat_right(&v.conj()).div_scalar(&v.norm());
        let trace = DualTrace { a, b, raw, lambda: red.lambda, rho: red.rho };

        // back to the original frame
        let mut c_poly = DualQuatPoly::new(part.p.mul_quat_left(&u), d.mul_quat_left(&u));
        let mut cofactor = q.mul_quat_left(&u);
        let (c, root) = square_free_constant(&part.solution.c * &u.norm());
        if let Some(r) = root {
            c_poly = c_poly.div_scalar(&r);
            cofactor = cofactor.div_scalar(&r);
        }
        let motion = MotionPoly::new(c_poly).map_err(|_| Error::Internal("synthesized C violates the Study condition"))?;
        let saturated = reduced.scale_poly(&report.ell);
        let v = verify_solution(&motion, &saturated, Tolerance::default())?;
        if v.h != part.h || v.c != c {
            return Err(Error::Internal("verification returned an unexpected cofactor"));
        }
        let deg_c = motion.degree().finite().unwrap_or(0);
        let deg_l = saturated.degree().finite().unwrap_or(0);
        if 2 * deg_c != deg_l + part.h.deg0() {
            return Err(Error::Internal("degree formula violated"));
        }
        return Ok(SynthesisResult {
            motion,
            family_translation_degree: part.h.deg0(),
            h: part.h,
            c,
            ell: report.ell.clone(),
            rotation_applied: u,
            primal_cofactor: cofactor,
            removed,
            line: saturated,
            trace,
        });
    }
    Err(Error::RotationsExhausted)
}

/// Members `(P + ε(D + nu (P/h) k)) v` of the family of minimal solutions.
pub fn solution_family(res: &SynthesisResult, nu: &P, unit: &Quat<Rational>) -> Result<MotionPoly<Rational>> {
    if let Degree::Finite(d) = nu.degree() {
        if d > res.family_translation_degree {
            return Err(Error::FamilyBound { allowed: res.family_translation_degree, got: d });
        }
    }
    if !unit.x.is_zero() || !unit.y.is_zero() || unit.is_zero() {
        return Err(Error::InvalidInput("unit must be a nonzero quaternion v0 + v3 k"));
    }
    let shift = res.primal_cofactor.mul_quat_right(&Quat::k()).scale_poly(nu);
    let c = DualQuatPoly::new(res.motion.primal().clone(), res.motion.dual() + &shift);
    let mut c = c.mul_right(&DualQuat::new(unit.clone(), Quat::zero()));
    if let Some(r) = unit.norm().sqrt_exact() {
        c = c.div_scalar(&r);
    }
    MotionPoly::new(c).map_err(|_| Error::Internal("family member violates the Study condition"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification<S> {
    /// Monic real cofactor.
    pub h: Poly<S>,
    /// Positive constant.
    pub c: S,
}

/// Largest coefficient of the 2x2 minors `T_a L_b - T_b L_a` over all
/// coordinate pairs.
fn minor_residual<S: Scalar>(t: &[&Poly<S>], l: &[&Poly<S>]) -> f64 {
    let mut worst = 0.0f64;
    for a in 0..t.len() {
        for b in (a + 1)..t.len() {
            let r = &(t[a] * l[b]) - &(t[b] * l[a]);
            worst = worst.max(r.max_abs());
        }
    }
    worst
}

/// Checks `eps_conj(C) k conj(eps_conj(C)) = c h L` for a monic real `h`
/// and a positive constant `c`.
pub fn verify_solution<S: Scalar>(motion: &MotionPoly<S>, line: &LinePoly<S>, tol: Tolerance) -> Result<Verification<S>> {
    let img = line_image(motion.inner(), &DualQuat::new(Quat::k(), Quat::zero()));
    let t = [&img.primal.w, &img.primal.x, &img.primal.y, &img.primal.z, &img.dual.w, &img.dual.x, &img.dual.y, &img.dual.z];
    let lp = line.primal();
    let ld = line.dual();
    let l = [&lp.w, &lp.x, &lp.y, &lp.z, &ld.w, &ld.x, &ld.y, &ld.z];
    let scale = img.max_abs() * line.max_abs();
    let residual = minor_residual(&t, &l);
    if !tol.negligible::<S>(residual, scale) {
        return Err(Error::VerificationFailure { residual });
    }
    let pivot = (0..8).max_by(|&a, &b| l[a].max_abs().partial_cmp(&l[b].max_abs()).unwrap()).unwrap();
    let (phi, rem) = t[pivot].divmod(l[pivot])?;
    if !tol.negligible::<S>(rem.max_abs(), t[pivot].max_abs()) {
        return Err(Error::VerificationFailure { residual: rem.max_abs() });
    }
    let c = match phi.leading() {
        Some(c) if c.signum_i() > 0 => c.clone(),
        _ => return Err(Error::VerificationFailure { residual: scale }),
    };
    let h = phi.div_scalar(&c);
    let back = line.as_dual_quat_poly().scale_poly(&phi);
    let diff = (&img - &back).max_abs();
    if !tol.negligible::<S>(diff, scale.max(img.max_abs())) {
        return Err(Error::VerificationFailure { residual: diff });
    }
    Ok(Verification { h, c })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalityReport {
    /// `C` has the minimal degree and cofactor among all motions for `L`.
    pub minimal: bool,
    /// Minimal motions are unique up to the trivial freedoms.
    pub unique: bool,
}

/// Compares the cofactor achieved by `motion` with the minimal one
/// `ell^2 rgcd(L_p)` (relative to the reduced line `L`), and the degree with
/// `(deg(ell L) + deg(ell rgcd(L_p))) / 2`.
pub fn minimality_check(motion: &MotionPoly<Rational>, line: &LinePoly<Rational>) -> Result<MinimalityReport> {
    let (reduced, _) = reduce(line);
    let report = saturation_analysis(&reduced)?;
    let v = verify_solution(motion, &reduced, Tolerance::default())?;
    let h_min = &report.ell * &report.g;
    let expected = &report.ell * &h_min;
    let deg_c = motion.degree().finite().unwrap_or(0);
    let deg_l = reduced.degree().finite().unwrap_or(0) + report.ell.deg0();
    let minimal = v.h == expected && 2 * deg_c == deg_l + h_min.deg0();
    Ok(MinimalityReport { minimal, unique: h_min.is_one() })
}
