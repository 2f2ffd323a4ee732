//! Sturm sequences, exact real root isolation and rational root recovery.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// An end point of a real interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInfinity,
    At(Rational),
    PosInfinity,
}

fn sturm_chain(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let mut chain = alloc::vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Poly<Rational>], x: &Bound) -> usize {
    variations(chain.iter().map(|p| {
        let lc = p.leading().map(|c| c.signum_i()).unwrap_or(0);
        match x {
            Bound::At(v) => p.eval(v).signum_i(),
            Bound::PosInfinity => lc,
            Bound::NegInfinity => {
                if p.deg0() % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
        }
    }))
}

/// Number of distinct real roots of a square-free `p` in `(lo, hi]`.
pub fn sturm_real_root_count(p: &Poly<Rational>, lo: &Bound, hi: &Bound) -> Result<usize> {
    if !p.is_squarefree() {
        return Err(Error::Precondition("Sturm counting needs a square-free polynomial"));
    }
    let chain = sturm_chain(p);
    let a = variations_at(&chain, lo);
    let b = variations_at(&chain, hi);
    Ok(a.saturating_sub(b))
}

fn cauchy_bound(p: &Poly<Rational>) -> Rational {
    let lc = p.leading().unwrap().abs();
    let m = p.coeffs()[..p.deg0()]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// Disjoint intervals `(lo, hi]`, each holding exactly one real root of the
/// square-free `p`, refined until narrower than `width`.
fn isolate(p: &Poly<Rational>, width: &Rational) -> Vec<(Rational, Rational)> {
    let chain = sturm_chain(p);
    let count = |lo: &Rational, hi: &Rational| {
        variations_at(&chain, &Bound::At(lo.clone())) - variations_at(&chain, &Bound::At(hi.clone()))
    };
    let b = cauchy_bound(p);
    let mut todo = alloc::vec![(-b.clone(), b)];
    let mut out = Vec::new();
    let two = Rational::from_i64(2);
    while let Some((lo, hi)) = todo.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 if &(&hi - &lo) < width || p.eval(&hi).is_zero() => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                todo.push((mid.clone(), hi));
                todo.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Simplest fraction (smallest denominator) in the closed interval `[lo, hi]`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *hi {
        return next;
    }
    let inner = simplest_positive(&(Rational::one() / (hi - &fl)), &(Rational::one() / (lo - &fl)));
    fl + Rational::one() / inner
}

/// All rational roots of `p` (square-free part is taken internally), sorted.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.div_exact(&p.gcd(&p.derivative())).expect("gcd divides");
    // integer primitive form: a rational root u/v in lowest terms has v | lc
    let lcm = sf.coeffs().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let lc_int = (sf.leading().unwrap() * Rational::from_integer(lcm)).to_integer().abs();
    let sep = Rational::new(BigInt::from(1), &lc_int * &lc_int * BigInt::from(2));
    let mut roots = Vec::new();
    for (lo, hi) in isolate(&sf, &sep) {
        let cand = if sf.eval(&hi).is_zero() { hi } else { simplest_between(&lo, &hi) };
        if sf.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots
}

/// Floating point approximations of the real roots of `p`.
pub fn real_roots_f64(p: &Poly<Rational>) -> Vec<f64> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.div_exact(&p.gcd(&p.derivative())).expect("gcd divides");
    let width = Rational::new(BigInt::from(1), BigInt::from(1u64 << 50));
    isolate(&sf, &width)
        .into_iter()
        .map(|(lo, hi)| ((lo + hi) / Rational::from_i64(2)).to_f64())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(cs)
    }

    fn all(q: &Poly<Rational>) -> usize {
        sturm_real_root_count(q, &Bound::NegInfinity, &Bound::PosInfinity).unwrap()
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(all(&p(&[1, 0, 1])), 0);
        assert_eq!(all(&p(&[-2, 1])), 1);
        assert_eq!(all(&p(&[-2, 0, 1])), 2);
        // half-open interval semantics
        let q = p(&[-2, 1]);
        let at = |v: i64| Bound::At(Rational::from_i64(v));
        assert_eq!(sturm_real_root_count(&q, &at(2), &at(3)).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&q, &at(1), &at(2)).unwrap(), 1);
    }

    #[test]
    fn sturm_rejects_repeated_roots() {
        assert!(sturm_real_root_count(&p(&[0, 0, 1]), &Bound::NegInfinity, &Bound::PosInfinity).is_err());
    }

    #[test]
    fn finds_rational_roots_only() {
        // (2t - 3)(t + 5)(t^2 - 2)
        let q = &(&p(&[-3, 2]) * &p(&[5, 1])) * &p(&[-2, 0, 1]);
        assert_eq!(rational_roots(&q), alloc::vec![Rational::from_i64(-5), Rational::from_ratio(3, 2)]);
        assert!(rational_roots(&p(&[1, 0, 1])).is_empty());
        let f = real_roots_f64(&p(&[-2, 0, 1]));
        assert_eq!(f.len(), 2);
        assert!((f[1] - core::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn simplest_fraction() {
        let r = |n, d| Rational::from_ratio(n, d);
        assert_eq!(simplest_between(&r(31, 100), &r(34, 100)), r(1, 3));
        assert_eq!(simplest_between(&r(-34, 100), &r(-31, 100)), r(-1, 3));
        assert_eq!(simplest_between(&r(-1, 2), &r(1, 2)), r(0, 1));
        assert_eq!(simplest_between(&r(5, 2), &r(7, 2)), r(3, 1));
    }
}
