//! Degree-two motions whose moving line passes through three given lines,
//! and the Bennett linkages obtained from their two factorizations.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factor::{factor_into_linear, norm_quadratics, LinearFactor};
use crate::line::{line_image, LinePoly, PluckerLine};
use crate::linalg::{lstsq, Matrix};
use crate::motion::{DualQuatPoly, MotionPoly};
use crate::poly::Poly;
use crate::quat::{DualQuat, Quat};
use crate::quatpoly::QuatPoly;
use crate::scalar::Tolerance;

type QP = QuatPoly<f64>;

const RCOND: f64 = 1e-10;
/// Row weight of identities that must hold exactly (Plücker, Study) against
/// conditions fitted to rounded input data.
const HARD_WEIGHT: f64 = 1e6;

/// A quaternion `p` with `p k conj(p) = lp`: the half-turn about the
/// bisector of `k` and `lp`, scaled by `sqrt|lp|`, followed by the rotation
/// by `2 phi` about `k`.
pub fn preimage_half_turn(lp: [f64; 3], phi: f64) -> Result<Quat<f64>> {
    let n = libm::sqrt(lp.iter().map(|c| c * c).sum());
    if n == 0.0 {
        return Err(Error::DegenerateInput("zero direction"));
    }
    let spin = Quat::new(libm::cos(phi), 0.0, 0.0, libm::sin(phi));
    let u = [lp[0] / n, lp[1] / n, lp[2] / n + 1.0];
    let un = libm::sqrt(u.iter().map(|c| c * c).sum());
    let root = libm::sqrt(n);
    let axis = if un <= 1e-12 {
        // lp points along -k
        Quat::i()
    } else {
        Quat::vector([u[0] / un, u[1] / un, u[2] / un])
    };
    Ok(&axis.scale(&root) * &spin)
}

/// Lagrange basis polynomials of three distinct knots.
pub fn lagrange_basis(knots: [f64; 3]) -> [Poly<f64>; 3] {
    core::array::from_fn(|i| {
        let mut acc = Poly::constant(1.0);
        for (j, &t) in knots.iter().enumerate() {
            if j != i {
                let lin = Poly::from_coeffs(alloc::vec![-t / (knots[i] - t), 1.0 / (knots[i] - t)]);
                acc = &acc * &lin;
            }
        }
        acc
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationOptions {
    /// Angles selecting the preimage of each primal part.
    pub phis: [f64; 3],
    /// Map the axes from the frame of `leading^-1 C` to the fixed frame.
    pub apply_leading: bool,
    pub tolerance: Tolerance,
}

impl Default for InterpolationOptions {
    fn default() -> Self {
        InterpolationOptions { phis: [0.0; 3], apply_leading: false, tolerance: Tolerance::new(1e-8) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationResiduals {
    /// Plücker and interpolation conditions of the dual part of `L`.
    pub line_dual: f64,
    /// `|L_d(t_i) - w_i L_{i,d}|`, largest over the knots.
    pub line_dual_at_knots: f64,
    /// Equations for the dual part of the motion.
    pub motion_dual: f64,
    pub motion_dual_rank: usize,
    /// Proportionality residual of the moved line at each knot.
    pub knots: [f64; 3],
    pub factorization_a: f64,
    pub factorization_b: f64,
}

#[derive(Clone, Debug)]
pub struct BennettResult {
    pub motion: MotionPoly<f64>,
    pub line: LinePoly<f64>,
    pub preimages: [Quat<f64>; 3],
    /// `c_2`, the leading coefficient of the motion.
    pub leading: DualQuat<f64>,
    /// Monic quadratics of the primal norm, by increasing real part of the roots.
    pub norm_factors: [Poly<f64>; 2],
    /// `C = c_2 (t - h_1)(t - h_2)` with `(t - h_2)` of norm `norm_factors[0]`.
    pub factorization_a: [LinearFactor<f64>; 2],
    /// `C = c_2 (t - k_1)(t - k_2)` with `(t - k_2)` of norm `norm_factors[1]`.
    pub factorization_b: [LinearFactor<f64>; 2],
    /// Revolute axes in linkage order `h_1, h_2, k_2, k_1`.
    pub axes: [PluckerLine<f64>; 4],
    pub residuals: InterpolationResiduals,
}

fn norm3(v: &[f64; 3]) -> f64 {
    libm::sqrt(v.iter().map(|c| c * c).sum())
}

/// Coefficient matrix of a linear map given by its values on unit vectors.
fn matrix_of(cols: usize, map: impl Fn(&[f64]) -> Vec<f64>) -> Matrix {
    let mut e = alloc::vec![0.0; cols];
    let columns: Vec<Vec<f64>> = (0..cols)
        .map(|c| {
            e[c] = 1.0;
            let v = map(&e);
            e[c] = 0.0;
            v
        })
        .collect();
    let mut m = Matrix::zeros(columns[0].len(), cols);
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m.set(r, c, *v);
        }
    }
    m
}

fn vector_poly(x: &[f64], len: usize) -> QP {
    let cs: Vec<Quat<f64>> = (0..len).map(|e| Quat::vector([x[3 * e], x[3 * e + 1], x[3 * e + 2]])).collect();
    QP::from_coeffs(&cs)
}

fn quat_poly(x: &[f64], len: usize) -> QP {
    let cs: Vec<Quat<f64>> = (0..len).map(|e| Quat::new(x[4 * e], x[4 * e + 1], x[4 * e + 2], x[4 * e + 3])).collect();
    QP::from_coeffs(&cs)
}

fn coeff_list(p: &Poly<f64>, len: usize) -> impl Iterator<Item = f64> + '_ {
    (0..len).map(move |i| p.coeff(i))
}

/// Dual part of the interpolating ruled surface: the Plücker condition
/// with the given primal part plus the prescribed values at the knots.
fn solve_line_dual(lp: &QP, knots: [f64; 3], targets: [[f64; 3]; 3], tol: Tolerance) -> Result<(QP, f64)> {
    let n = lp.deg0() + 1;
    let system = |x: &[f64]| {
        let ld = vector_poly(x, n);
        let dot = &(&(&lp.x * &ld.x) + &(&lp.y * &ld.y)) + &(&lp.z * &ld.z);
        let mut rows: Vec<f64> = coeff_list(&dot, 2 * n - 1).map(|v| v * HARD_WEIGHT).collect();
        for &t in &knots {
            let v = ld.eval(&t);
            rows.extend([v.x, v.y, v.z]);
        }
        rows
    };
    let a = matrix_of(3 * n, system);
    let mut b = alloc::vec![0.0; 2 * n - 1];
    b.extend(targets.iter().flatten());
    let sol = lstsq(&a, &b, RCOND);
    let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if sol.rank < 3 * n || !tol.negligible::<f64>(sol.residual, scale) {
        return Err(Error::InterpolationFailure { stage: "dual part of the ruled surface", rank: sol.rank, residual: sol.residual });
    }
    Ok((vector_poly(&sol.x, n), sol.residual))
}

/// Dual part of the motion from `-P k conj(D) - D k conj(P) = L_d` and the
/// Study condition, with the free multiple of `P k` fixed by a vanishing
/// `i`-coefficient of the constant term.
fn solve_motion_dual(p: &QP, ld: &QP, tol: Tolerance) -> Result<(QP, f64, usize)> {
    let n = p.deg0() + 1;
    let k = QP::k();
    let rows_out = 2 * n - 1;
    let system = |x: &[f64]| {
        let d = quat_poly(x, n);
        let lhs = -&(&(&(p * &k) * &d.conj()) + &(&(&d * &k) * &p.conj()));
        let study = &(p * &d.conj()) + &(&d * &p.conj());
        let mut rows: Vec<f64> = Vec::new();
        for c in [&lhs.x, &lhs.y, &lhs.z] {
            rows.extend(coeff_list(c, rows_out));
        }
        rows.extend(coeff_list(&study.w, rows_out).map(|v| v * HARD_WEIGHT));
        rows
    };
    let a = matrix_of(4 * n, system);
    let mut b: Vec<f64> = Vec::new();
    for c in [&ld.x, &ld.y, &ld.z] {
        b.extend(coeff_list(c, rows_out));
    }
    b.extend(core::iter::repeat_n(0.0, rows_out));
    let sol = lstsq(&a, &b, RCOND);
    let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if sol.rank + 1 < 4 * n || !tol.negligible::<f64>(sol.residual, scale) {
        return Err(Error::InterpolationFailure { stage: "dual part of the motion", rank: sol.rank, residual: sol.residual });
    }
    let mut d = quat_poly(&sol.x, n);
    let pk = p * &k;
    let pivot = pk.coeff(0).x;
    if pivot.abs() > 1e-12 * pk.max_abs() {
        d = &d + &pk.scale(&(-d.coeff(0).x / pivot));
    }
    Ok((d, sol.residual, sol.rank))
}

fn axis_line(f: &LinearFactor<f64>, leading: Option<&DualQuat<f64>>) -> PluckerLine<f64> {
    let mut a = f.axis();
    if let Some(c) = leading {
        a = line_image(&DualQuatPoly::constant(c), &a).coeff(0);
    }
    PluckerLine { direction: a.primal.vector_part(), moment: a.dual.vector_part() }
}

/// Degree-two motion `C` with `C(t_i)` moving `k` onto `w_i L_i`, and its
/// two factorizations into revolute factors.
pub fn interpolate_three_lines(
    lines: &[PluckerLine<f64>; 3],
    knots: [f64; 3],
    weights: [f64; 3],
    opts: &InterpolationOptions,
) -> Result<BennettResult> {
    let tol = opts.tolerance;
    if !(knots[0] < knots[1] && knots[1] < knots[2]) {
        return Err(Error::InvalidInput("knots must be strictly increasing"));
    }
    if weights.iter().any(|w| *w == 0.0 || !w.is_finite()) {
        return Err(Error::InvalidInput("weights must be nonzero"));
    }
    for l in lines {
        if norm3(&l.direction) == 0.0 {
            return Err(Error::DegenerateInput("line with zero direction"));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if lines[i].proportionality_residual(&lines[j]) <= 1e-12 {
                return Err(Error::DegenerateInput("two of the lines coincide"));
            }
        }
    }

    let basis = lagrange_basis(knots);
    let mut preimages = [Quat::zero(), Quat::zero(), Quat::zero()];
    for i in 0..3 {
        let lp = lines[i].direction.map(|c| c * weights[i]);
        preimages[i] = preimage_half_turn(lp, opts.phis[i])?;
    }
    let p = (0..3).fold(QP::zero(), |acc, i| &acc + &QP::constant(&preimages[i]).scale_poly(&basis[i]));
    if p.degree() != crate::poly::Degree::Finite(2) {
        return Err(Error::DegenerateInput("preimages do not span a quadratic"));
    }
    let lp = &(&p * &QP::k()) * &p.conj();
    let targets: [[f64; 3]; 3] = core::array::from_fn(|i| lines[i].moment.map(|c| c * weights[i]));
    let (ld, line_dual) = solve_line_dual(&lp, knots, targets, tol)?;
    let line_dual_at_knots = (0..3)
        .map(|i| {
            let v = ld.eval(&knots[i]);
            let d = [v.x - targets[i][0], v.y - targets[i][1], v.z - targets[i][2]];
            d.iter().fold(0.0f64, |m, x| m.max(x.abs()))
        })
        .fold(0.0, f64::max);
    let (d, motion_dual, motion_dual_rank) = solve_motion_dual(&p, &ld, tol)?;
    let motion = MotionPoly::with_tolerance(DualQuatPoly::new(p, d), tol)?;
    let line = LinePoly::new_unchecked(lp, ld);

    let knot_res: [f64; 3] = core::array::from_fn(|i| {
        let v = motion.inner().eval(&knots[i]);
        let img = line_image(&DualQuatPoly::constant(&v), &PluckerLine::<f64>::k().to_dual_quat()).coeff(0);
        let moved = PluckerLine { direction: img.primal.vector_part(), moment: img.dual.vector_part() };
        moved.proportionality_residual(&lines[i])
    });

    let quads = norm_quadratics(&motion, tol)?;
    let [q0, q1]: [Poly<f64>; 2] =
        quads.try_into().map_err(|_| Error::InterpolationFailure { stage: "norm factors", rank: 0, residual: f64::NAN })?;
    let fa = factor_into_linear(&motion, &[q0.clone(), q1.clone()], tol)?;
    let fb = factor_into_linear(&motion, &[q1.clone(), q0.clone()], tol)?;
    let scale = motion.inner().max_abs();
    let res_a = (&fa.product() - motion.inner()).max_abs() / scale;
    let res_b = (&fb.product() - motion.inner()).max_abs() / scale;
    let leading = fa.leading.clone();
    let [h1, h2]: [LinearFactor<f64>; 2] = fa.factors.try_into().map_err(|_| Error::Internal("expected two factors"))?;
    let [k1, k2]: [LinearFactor<f64>; 2] = fb.factors.try_into().map_err(|_| Error::Internal("expected two factors"))?;
    let lead = opts.apply_leading.then_some(&leading);
    let axes = [axis_line(&h1, lead), axis_line(&h2, lead), axis_line(&k2, lead), axis_line(&k1, lead)];

    Ok(BennettResult {
        motion,
        line,
        preimages,
        leading,
        norm_factors: [q0, q1],
        factorization_a: [h1, h2],
        factorization_b: [k1, k2],
        axes,
        residuals: InterpolationResiduals {
            line_dual,
            line_dual_at_knots,
            motion_dual,
            motion_dual_rank,
            knots: knot_res,
            factorization_a: res_a,
            factorization_b: res_b,
        },
    })
}
