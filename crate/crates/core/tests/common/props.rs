//! Seeded property checks shared by proptest and the acceptance run.

use ruled_motion::line::line_image;
use ruled_motion::{
    act_on_line, extract_right_factor_quadratic, minimality_check, peel_translation_factor, synthesize,
    verify_solution, DualQuat, DualQuatPoly, LinearFactor, PluckerLine, Quat, SynthesisOptions, Tolerance,
};

use super::{r, random};

pub enum Outcome {
    Checked,
    /// The input motion generates the line with a cofactor below
    /// `ell rgcd(L_p)`, so the synthesized motion has larger degree.
    BelowBound,
    /// The random instance missed a precondition.
    Skipped,
}

pub type Check = Result<Outcome, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Closed-form line coordinates of `eps_conj(C) k conj(eps_conj(C))` and
/// `l . l' = -2 |P|^2 (P . D)`.
pub fn plucker_product(seed: u64) -> Check {
    let mut rng = random::rng(seed);
    let p = random::quat_poly(&mut rng, 4);
    let d = random::quat_poly(&mut rng, 4);
    let (p0, p1, p2, p3) = (&p.w, &p.x, &p.y, &p.z);
    let (d0, d1, d2, d3) = (&d.w, &d.x, &d.y, &d.z);
    let two = r(2, 1);
    let l1 = (&(p0 * p2) + &(p1 * p3)).scale(&two);
    let l2 = (&(p2 * p3) - &(p0 * p1)).scale(&two);
    let l3 = &(&(p0 * p0) - &(p1 * p1)) + &(&(p3 * p3) - &(p2 * p2));
    let l5 = (&(&(d0 * p2) + &(d1 * p3)) + &(&(d2 * p0) + &(d3 * p1))).scale(&-two.clone());
    let l6 = (&(&(d2 * p3) + &(d3 * p2)) - &(&(d0 * p1) + &(d1 * p0))).scale(&-two.clone());
    let l7 = (&(&(d0 * p0) - &(d1 * p1)) + &(&(d3 * p3) - &(d2 * p2))).scale(&-two);
    let img = line_image(&DualQuatPoly::new(p.clone(), d.clone()), &DualQuat::new(Quat::k(), Quat::zero()));
    ensure!((&img.primal.x, &img.primal.y, &img.primal.z) == (&l1, &l2, &l3), "primal coordinates differ (seed {seed})");
    ensure!((&img.dual.x, &img.dual.y, &img.dual.z) == (&l5, &l6, &l7), "dual coordinates differ (seed {seed})");
    let lhs = &(&(&l1 * &l5) + &(&l2 * &l6)) + &(&l3 * &l7);
    let pd = &(&(d0 * p0) + &(d1 * p1)) + &(&(d2 * p2) + &(d3 * p3));
    ensure!(lhs == (&p.norm() * &pd).scale(&r(-2, 1)), "product identity fails (seed {seed})");
    Ok(Outcome::Checked)
}

/// Random motion, its trajectory of `k`, and the synthesized motion.
pub fn synthesis_roundtrip(seed: u64) -> Check {
    let mut rng = random::rng(seed);
    let c0 = random::motion(&mut rng);
    let line = act_on_line(&c0, &PluckerLine::k()).map_err(|e| format!("{e} (seed {seed})"))?;
    let res = synthesize(&line, &SynthesisOptions::default()).map_err(|e| format!("{e} (seed {seed})"))?;
    let v = verify_solution(&res.motion, &line, Tolerance::default()).map_err(|e| format!("{e} (seed {seed})"))?;
    ensure!(!v.h.is_zero(), "zero cofactor (seed {seed})");
    let below_bound = res.motion.degree() > c0.degree();
    if below_bound {
        let h0 = verify_solution(&c0, &line, Tolerance::default()).map_err(|e| format!("{e} (seed {seed})"))?.h;
        ensure!(h0.deg0() < res.h.deg0(), "degree grew without a smaller input cofactor (seed {seed})");
        ensure!(!minimality_check(&c0, &line).map_err(|e| e.to_string())?.minimal, "input reported minimal (seed {seed})");
    }
    ensure!(res.motion.inner().study_residual().is_zero(), "Study condition fails (seed {seed})");
    let deg_c = res.motion.degree().finite().unwrap_or(0);
    let deg_l = res.line.degree().finite().unwrap_or(0);
    ensure!(2 * deg_c == deg_l + res.h.deg0(), "degree formula fails (seed {seed})");
    let m = minimality_check(&res.motion, &line).map_err(|e| format!("{e} (seed {seed})"))?;
    ensure!(m.minimal, "output not minimal (seed {seed})");
    Ok(if below_bound { Outcome::BelowBound } else { Outcome::Checked })
}

pub fn quadratic_peel(seed: u64) -> Check {
    let mut rng = random::rng(seed);
    let c0 = random::motion(&mut rng);
    let h = random::linear_root(&mut rng);
    let e = LinearFactor::new(h.clone());
    // a shared norm factor makes the right factor non-unique
    if !c0.norm().gcd(&e.norm()).is_one() {
        return Ok(Outcome::Skipped);
    }
    let c = &c0 * &e.motion();
    let (rest, got) =
        extract_right_factor_quadratic(&c, &e.norm(), Tolerance::default()).map_err(|e| format!("{e} (seed {seed})"))?;
    ensure!(got.h == h && rest == c0, "wrong factors (seed {seed})");
    Ok(Outcome::Checked)
}

pub fn translation_peel(seed: u64) -> Check {
    let mut rng = random::rng(seed);
    let m = 1 + (seed % 2) as u32;
    let c0 = random::motion(&mut rng);
    let f = random::irreducible_quadratic(&mut rng);
    if !c0.norm().gcd(&f).is_one() {
        return Ok(Outcome::Skipped);
    }
    let e = random::translation_factor(&mut rng, &f, m);
    let c = &c0 * &e;
    let (rest, got) = peel_translation_factor(&c, &f, m).map_err(|e| format!("{e} (seed {seed})"))?;
    ensure!(rest == c0 && got == e, "wrong factors (seed {seed})");
    Ok(Outcome::Checked)
}
