//! Worked examples shared by the integration tests.
#![allow(dead_code)]

use ruled_motion::{DualQuatPoly, LinePoly, MotionPoly, Poly, QuatPoly, Rational, Scalar};

pub mod bennett;
pub mod props;

pub type P = Poly<Rational>;
pub type QP = QuatPoly<Rational>;

/// Polynomial from coefficients listed from the highest power down.
pub fn desc(cs: &[i64]) -> P {
    let mut v = cs.to_vec();
    v.reverse();
    P::from_i64s(&v)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn qp(w: P, x: P, y: P, z: P) -> QP {
    QP::new(w, x, y, z)
}

pub fn zero() -> P {
    P::zero()
}

/// `t^2 - 6t + 10`, the primal content of the first example.
pub fn g1() -> P {
    desc(&[1, -6, 10])
}

pub fn k_line() -> LinePoly<Rational> {
    let m = QP::vector(desc(&[2, -4, 2, -14]), -&desc(&[2, -6, 4, 8]), desc(&[1, 0, 1, 14, -8]));
    let kd = QP::vector(desc(&[112, 0]), desc(&[1, 0, 0, 0, -51, 42, -104]), desc(&[2, -6, 2, -14, -4, 104]));
    LinePoly::new(m.scale_poly(&g1()), kd).unwrap()
}

pub fn q1() -> QP {
    qp(desc(&[1, 0, 1]), desc(&[1, -2]), desc(&[1, -3]), desc(&[1, 2]))
}

/// The degree-four motion generating `k_line` with `h = g1`.
pub fn c28() -> MotionPoly<Rational> {
    let half = r(1, 2);
    let dual = qp(desc(&[12]), desc(&[1, -1, 7, -33, -8]), -&desc(&[8, -16, 12]), -&desc(&[1, -5, 11, -17, 32])).scale(&half);
    MotionPoly::new(DualQuatPoly::new(q1().scale_poly(&g1()), dual)).unwrap()
}

/// `1 + t k + ε(t - k)`.
pub fn e_hat() -> MotionPoly<Rational> {
    let primal = qp(desc(&[1]), zero(), zero(), desc(&[1, 0]));
    let dual = qp(desc(&[1, 0]), zero(), zero(), desc(&[-1]));
    MotionPoly::new(DualQuatPoly::new(primal, dual)).unwrap()
}

/// A degree-five motion generating `k_line` with `h = (t^2 + 1) g1`.
pub fn c_hat() -> MotionPoly<Rational> {
    &c28() * &e_hat()
}

/// The degree-five motion as printed. Its primal part agrees with `c_hat`,
/// its dual part does not generate a multiple of `k_line`.
pub fn c_hat_printed() -> MotionPoly<Rational> {
    let primal = qp(desc(&[-2, 13, -26, 10]), desc(&[1, -8, 20, -8, -20]), desc(&[-1, 9, -31, 48, -30]), desc(&[1, -6, 12, -10, 8, 20]));
    let dual = qp(
        desc(&[14, -37, 52, -41, 29, 108]),
        desc(&[14, 81, -13, -183, 92]),
        desc(&[14, 140, 230, 21, -48]),
        desc(&[28, -43, 140, -34]),
    )
    .scale(&r(1, 5));
    MotionPoly::new(DualQuatPoly::new(primal, dual)).unwrap()
}

/// A degree-six motion generating `k_line` with `h = (t^2 + 1)^2 g1`.
pub fn c_tilde() -> MotionPoly<Rational> {
    let primal = qp(
        desc(&[1, -6, 12, -12, 21, -6, 10]),
        desc(&[1, -8, 23, -28, 22, -20]),
        desc(&[1, -9, 29, -39, 28, -30]),
        desc(&[1, -4, -1, 16, -2, 20]),
    );
    let dual = qp(
        desc(&[-2, 20, 4, -28]),
        desc(&[1, -1, 8, -32, -19, 23, -68]),
        desc(&[-8, 14, -4, -28, 28]),
        desc(&[-1, 5, -10, 10, -21, 5, -12]),
    )
    .scale(&r(1, 2));
    MotionPoly::new(DualQuatPoly::new(primal, dual)).unwrap()
}

/// Primal part of the saturation example.
pub fn saturation_primal() -> QP {
    let m = QP::vector(desc(&[-2, 8, 8, 0]), desc(&[2, 8, -8, 0]), desc(&[1, 0, 2, 0, -8]));
    let g = &(&desc(&[1, 0, 1]) * &desc(&[1, -1]).pow(2)) * &desc(&[1, -2]);
    m.scale_poly(&g)
}

/// Cubic parametrization of the cylindroid; its norm is not a square.
pub fn cylindroid_cubic() -> LinePoly<Rational> {
    let s = desc(&[1, 0, 1]);
    let lp = QP::vector(&s * &desc(&[1, 0]), s, zero());
    let ld = QP::vector(desc(&[-2, 0]), desc(&[2, 0, 0]), zero());
    LinePoly::new(lp, ld).unwrap()
}

/// Two-to-one parametrization of the cylindroid; `axis_first` selects
/// the component that carries `1 - t^2` (`i` when true, `k` otherwise).
pub fn cylindroid_quintic(axis_first: bool) -> LinePoly<Rational> {
    let s2 = desc(&[1, 0, 1]).pow(2);
    let one_minus = desc(&[-1, 0, 1]);
    let two_t = desc(&[2, 0]);
    let a = &s2 * &one_minus;
    let b = &s2 * &two_t;
    let scale = &desc(&[-4, 0]) * &one_minus;
    let da = &scale * &two_t;
    let db = -&(&scale * &one_minus);
    let (lp, ld) = if axis_first {
        (QP::vector(a, b, zero()), QP::vector(da, db, zero()))
    } else {
        (QP::vector(zero(), b, a), QP::vector(zero(), db, da))
    };
    LinePoly::new(lp, ld).unwrap()
}

/// The motion of minimal degree printed for the swapped cylindroid.
pub fn cylindroid_motion() -> MotionPoly<Rational> {
    let s2 = desc(&[1, 0, 1]).pow(2);
    let primal = qp(zero(), zero(), -&(&s2 * &desc(&[1, 0])), -&s2);
    let c = &desc(&[2, 0]) * &desc(&[1, 0, -1]);
    let dual = qp(zero(), zero(), -&c, &c * &desc(&[1, 0]));
    MotionPoly::new(DualQuatPoly::new(primal, dual)).unwrap()
}

pub mod random {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use ruled_motion::{DualQuat, DualQuatPoly, MotionPoly, Poly, Quat, QuatPoly, Rational, Scalar};

    use super::{r, P, QP};

    pub fn rng(seed: u64) -> StdRng {
        StdRng::seed_from_u64(seed)
    }

    fn nonzero(rng: &mut StdRng, lim: i64) -> i64 {
        loop {
            let v = rng.random_range(-lim..=lim);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn rational(rng: &mut StdRng) -> Rational {
        r(rng.random_range(-9..=9), rng.random_range(1..=4))
    }

    pub fn poly(rng: &mut StdRng, deg: usize) -> P {
        P::from_coeffs((0..=deg).map(|_| rational(rng)).collect())
    }

    pub fn quat_poly(rng: &mut StdRng, deg: usize) -> QP {
        QP::new(poly(rng, deg), poly(rng, deg), poly(rng, deg), poly(rng, deg))
    }

    /// `h` of a linear motion factor `t - h` in general position: all
    /// components of the rotation axis nonzero.
    pub fn linear_root(rng: &mut StdRng) -> DualQuat<Rational> {
        let w = r(rng.random_range(-3..=3), 1);
        let v = [0; 3].map(|_| r(nonzero(rng, 3), 1));
        let d = [0; 3].map(|_| r(rng.random_range(-3..=3), 1));
        // moment orthogonal to the direction
        let m = [
            &v[1] * &d[2] - &v[2] * &d[1],
            &v[2] * &d[0] - &v[0] * &d[2],
            &v[0] * &d[1] - &v[1] * &d[0],
        ];
        DualQuat::new(Quat::new(w, v[0].clone(), v[1].clone(), v[2].clone()), Quat::vector(m))
    }

    pub fn linear_factor(rng: &mut StdRng) -> MotionPoly<Rational> {
        MotionPoly::new(DualQuatPoly::linear(&linear_root(rng))).unwrap()
    }

    /// Product of one to three linear factors.
    pub fn motion(rng: &mut StdRng) -> MotionPoly<Rational> {
        let n = rng.random_range(1..=3);
        let mut c = linear_factor(rng);
        for _ in 1..n {
            c = &c * &linear_factor(rng);
        }
        c
    }

    /// Monic irreducible quadratic.
    pub fn irreducible_quadratic(rng: &mut StdRng) -> P {
        let a = rational(rng);
        let b = r(rng.random_range(1..=9), rng.random_range(1..=3));
        // (t - a)^2 + b
        Poly::from_coeffs(vec![&(&a * &a) + &b, -(&a + &a), Rational::one()])
    }

    pub fn translation_factor(rng: &mut StdRng, f: &P, m: u32) -> MotionPoly<Rational> {
        let fm = f.pow(m);
        let e7 = poly(rng, fm.deg0() - 1);
        MotionPoly::new(DualQuatPoly::new(QuatPoly::real(fm), QuatPoly::k().scale_poly(&e7))).unwrap()
    }
}
