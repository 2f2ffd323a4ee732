//! Primal part: solving `Q k conj(Q) = c M` for a content-free vectorial `M`.

use num_bigint::BigInt;
use num_integer::Integer;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::line::{LinePoly, SaturationReport};
use crate::poly::Poly;
use crate::quat::Quat;
use crate::quatpoly::QuatPoly;
use crate::scalar::{Rational, Scalar};

type QP = QuatPoly<Rational>;

/// Number of coordinate changes tried before giving up.
pub const MAX_ROTATIONS: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct PrimalSolution {
    pub q: QP,
    /// Positive constant with `Q k conj(Q) = c M`.
    pub c: Rational,
    /// Coordinate change that made the construction succeed. `q` is already
    /// mapped back to the original frame.
    pub rotation: Quat<Rational>,
    pub m: QP,
}

/// Deterministic sequence of coordinate changes: the identity, the
/// half-turns about `i + k` and `j + k`, then pseudo-random integer
/// quaternions drawn from a seeded ChaCha8 stream.
#[derive(Clone, Debug)]
pub struct RotationSchedule {
    index: usize,
    rng: ChaCha8Rng,
}

impl RotationSchedule {
    pub fn new(seed: u64) -> Self {
        RotationSchedule { index: 0, rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Default for RotationSchedule {
    fn default() -> Self {
        RotationSchedule::new(0)
    }
}

impl Iterator for RotationSchedule {
    type Item = Quat<Rational>;

    fn next(&mut self) -> Option<Quat<Rational>> {
        self.index += 1;
        Some(match self.index {
            1 => Quat::one(),
            2 => Quat::from_i64s(0, 1, 0, 1),
            3 => Quat::from_i64s(0, 0, 1, 1),
            _ => loop {
                let mut c = [0i64; 4];
                for v in &mut c {
                    *v = (self.rng.next_u32() % 7) as i64 - 3;
                }
                if c.iter().any(|&v| v != 0) {
                    break Quat::from_i64s(c[0], c[1], c[2], c[3]);
                }
            },
        })
    }
}

/// `conj(u) q u / N(u)`.
pub(crate) fn rotate_quatpoly(q: &QP, u: &Quat<Rational>) -> QP {
    let n = u.norm();
    q.mul_quat_left(&u.conj()).mul_quat_right(u).div_scalar(&n)
}

/// Rotates the ruled surface by the constant quaternion `u`, mapping every
/// ruling `L(t)` to `conj(u) L(t) u / N(u)`. A solution `C'` of the rotated
/// problem maps back to `u C'`, with the normalizing constant multiplied by
/// `N(u)`.
pub fn rotate_problem(line: &LinePoly<Rational>, u: &Quat<Rational>) -> Result<LinePoly<Rational>> {
    if u.is_zero() {
        return Err(Error::Precondition("rotation by the zero quaternion"));
    }
    Ok(LinePoly::new_unchecked(rotate_quatpoly(line.primal(), u), rotate_quatpoly(line.dual(), u)))
}

/// The constant `c` with `q k conj(q) = c m`, if there is one.
pub(crate) fn proportionality(q: &QP, m: &QP) -> Option<Rational> {
    let t = &(q * &QP::k()) * &q.conj();
    let (tc, mc) = [(&t.x, &m.x), (&t.y, &m.y), (&t.z, &m.z)]
        .into_iter()
        .find(|(_, mc)| !mc.is_zero())?;
    let c = tc.leading()? / mc.leading()?;
    (t == m.scale(&c) && !c.is_zero()).then_some(c)
}

/// Rational content of the coefficients, positive.
fn content(q: &QP) -> Rational {
    let mut num = BigInt::from(0);
    let mut den = BigInt::from(1);
    for p in q.components() {
        for c in p.coeffs() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
    }
    Rational::new(num, den)
}

/// Normal form of a solution: no `k` component in the leading coefficient,
/// integer primitive coefficients unless `c` can be made one, and a
/// positive leading coefficient of the first nonzero among `w, z, y, x`.
fn canonicalize(q: QP, c: Rational) -> (QP, Rational) {
    let lc = q.leading();
    let (q, c) = if lc.z.is_zero() {
        (q, c)
    } else {
        let v = Quat::new(lc.w.clone(), Rational::zero(), Rational::zero(), -lc.z.clone());
        let n = v.norm();
        (q.mul_quat_right(&v), c * n)
    };
    let s = content(&q);
    let (mut q, mut c) = (q.div_scalar(&s), c / (&s * &s));
    if let Some(r) = c.sqrt_exact() {
        q = q.div_scalar(&r);
        c = Rational::one();
    }
    let first = [&q.w, &q.z, &q.y, &q.x].into_iter().find(|p| !p.is_zero()).and_then(|p| p.leading().cloned());
    if first.is_some_and(|l| l.signum_i() < 0) {
        q = -&q;
    }
    (q, c)
}

/// Direct construction in the given frame: with `A = M + sigma k` and
/// `n = (sigma + m3)/2`, the right gcd `G` of `A` and `n` is a right factor
/// of `A` with `(A / G) k conj(A / G)` proportional to `M` in generic
/// position.
fn construct(m: &QP, sigma: &Poly<Rational>) -> Option<(QP, Rational)> {
    let n = (sigma + &m.z).div_scalar(&Rational::from_i64(2));
    if n.is_zero() {
        let q = QP::i();
        let c = proportionality(&q, m)?;
        return Some((q, c));
    }
    let a = m + &QP::k().scale_poly(sigma);
    let g = a.right_gcd(&QP::real(n)).ok()?;
    let (q, r) = a.right_divmod(&g).ok()?;
    if !r.is_zero() {
        return None;
    }
    let c = proportionality(&q, m)?;
    (c.signum_i() > 0).then_some((q, c))
}

/// Finds `Q` with `Q k conj(Q) = c M`, `c > 0` constant.
pub fn solve_primal(m: &QP) -> Result<PrimalSolution> {
    solve_primal_with(m, RotationSchedule::default())
}

pub fn solve_primal_with(m: &QP, schedule: RotationSchedule) -> Result<PrimalSolution> {
    if !m.is_vectorial() {
        return Err(Error::NotVectorial);
    }
    if !m.rgcd()?.is_one() {
        return Err(Error::Precondition("right-hand side has a nontrivial real content"));
    }
    let sigma = m.norm().sqrt().ok_or(Error::NotKinematic)?;
    for u in schedule.take(MAX_ROTATIONS) {
        let mr = rotate_quatpoly(m, &u);
        if let Some((qr, _)) = construct(&mr, &sigma) {
            let q = qr.mul_quat_left(&u);
            let c = proportionality(&q, m).ok_or(Error::Internal("rotated solution lost proportionality"))?;
            let (q, c) = canonicalize(q, c);
            return Ok(PrimalSolution { q, c, rotation: u, m: m.clone() });
        }
    }
    Err(Error::RotationsExhausted)
}

/// Primal data of a minimal motion for a reduced kinematic line polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimalPart {
    /// `P = Q h`.
    pub p: QP,
    /// Real cofactor `h = ell g`.
    pub h: Poly<Rational>,
    /// Saturated line `ell L`.
    pub line: LinePoly<Rational>,
    pub solution: PrimalSolution,
}

/// Builds `P` from `Q`: `M = L_p / g`, `h = ell g`, `P = Q h`, so that
/// `P k conj(P) = c h ell L_p`. With `inject`, that `Q` is used verbatim
/// after checking it solves the primal equation.
pub fn build_primal_part(
    line: &LinePoly<Rational>,
    report: &SaturationReport,
    inject: Option<&QP>,
    schedule: RotationSchedule,
) -> Result<PrimalPart> {
    let m = line.primal().div_poly_exact(&report.g).ok_or(Error::Internal("rgcd does not divide L_p"))?;
    let solution = match inject {
        Some(q) => {
            let c = proportionality(q, &m).ok_or(Error::InvalidInput("injected Q does not solve Q k conj(Q) = c M"))?;
            if c.signum_i() <= 0 {
                return Err(Error::InvalidInput("injected Q gives a negative normalizer"));
            }
            PrimalSolution { q: q.clone(), c, rotation: Quat::one(), m }
        }
        None => solve_primal_with(&m, schedule)?,
    };
    let h = &report.ell * &report.g;
    let p = solution.q.scale_poly(&h);
    Ok(PrimalPart { p, h, line: line.scale_poly(&report.ell), solution })
}
