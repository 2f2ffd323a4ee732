//! Complex roots of real polynomials (Aberth iteration).

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Poly;

const MAX_ITER: usize = 500;

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots with multiplicity. Needs a nonconstant polynomial.
pub fn poly_roots(p: &Poly<f64>) -> Result<Vec<Complex64>> {
    let lc = *p.leading().ok_or(Error::Degenerate("zero polynomial has no roots"))?;
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c / lc).collect();
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Cauchy bound on the root moduli
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(0.5 * radius, 0.4 + core::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..MAX_ITER {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (f, df) = eval_with_derivative(&coeffs, z[i]);
            if f.norm() == 0.0 {
                continue;
            }
            let ratio = f / df;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    Ok(z)
}
