//! Small dense least-squares solver (one-sided Jacobi SVD).

use alloc::vec;
use alloc::vec::Vec;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c) * x[c]).sum()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// `A = U diag(s) V^T` with `U` of size `rows x cols` (columns zero where
/// `s` vanishes) and `V` square.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: Matrix,
    pub s: Vec<f64>,
    pub v: Matrix,
}

pub fn svd(a: &Matrix) -> Svd {
    let (m, n) = (a.rows.max(a.cols), a.cols);
    // columns of the (zero padded) matrix, rotated in place
    let mut cols: Vec<Vec<f64>> = (0..n).map(|c| (0..m).map(|r| if r < a.rows { a.get(r, c) } else { 0.0 }).collect()).collect();
    let mut v: Vec<Vec<f64>> = (0..n).map(|c| (0..n).map(|r| if r == c { 1.0 } else { 0.0 }).collect()).collect();
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|x| x * x).sum();
                let beta: f64 = cols[q].iter().map(|x| x * x).sum();
                let gamma: f64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x * y).sum();
                if gamma == 0.0 {
                    continue;
                }
                let ratio = gamma.abs() / libm::sqrt(alpha * beta);
                off = off.max(ratio);
                if ratio < 1e-15 {
                    continue;
                }
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                for vecs in [&mut cols, &mut v] {
                    for i in 0..vecs[p].len() {
                        let (x, y) = (vecs[p][i], vecs[q][i]);
                        vecs[p][i] = c * x - s * y;
                        vecs[q][i] = s * x + c * y;
                    }
                }
            }
        }
        if off < 1e-15 {
            break;
        }
    }
    let s: Vec<f64> = cols.iter().map(|c| libm::sqrt(c.iter().map(|x| x * x).sum())).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[j].total_cmp(&s[i]));
    let mut u = Matrix::zeros(a.rows, n);
    let mut vm = Matrix::zeros(n, n);
    let mut sv = Vec::with_capacity(n);
    for (k, &i) in order.iter().enumerate() {
        sv.push(s[i]);
        for r in 0..a.rows {
            u.set(r, k, if s[i] > 0.0 { cols[i][r] / s[i] } else { 0.0 });
        }
        for r in 0..n {
            vm.set(r, k, v[i][r]);
        }
    }
    Svd { u, s: sv, v: vm }
}

#[derive(Clone, Debug)]
pub struct LeastSquares {
    pub x: Vec<f64>,
    pub rank: usize,
    /// `|A x - b|_inf`.
    pub residual: f64,
    pub singular_values: Vec<f64>,
    /// Orthonormal basis of the numerical null space.
    pub null_space: Vec<Vec<f64>>,
}

/// Minimum-norm least-squares solution, dropping singular values below
/// `rcond` times the largest.
pub fn lstsq(a: &Matrix, b: &[f64], rcond: f64) -> LeastSquares {
    let Svd { u, s, v } = svd(a);
    let cutoff = rcond * s.first().copied().unwrap_or(0.0);
    let rank = s.iter().filter(|&&x| x > cutoff).count();
    let mut x = vec![0.0; a.cols];
    for k in 0..rank {
        let coef: f64 = (0..a.rows).map(|r| u.get(r, k) * b[r]).sum::<f64>() / s[k];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi += coef * v.get(i, k);
        }
    }
    let ax = a.mul_vec(&x);
    let residual = ax.iter().zip(b).fold(0.0f64, |m, (p, q)| m.max((p - q).abs()));
    let null_space = (rank..a.cols).map(|k| (0..a.cols).map(|i| v.get(i, k)).collect()).collect();
    LeastSquares { x, rank, residual, singular_values: s, null_space }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: usize, cols: usize, data: &[f64]) -> Matrix {
        Matrix { rows, cols, data: data.to_vec() }
    }

    #[test]
    fn reconstructs() {
        let a = matrix(3, 2, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let d = svd(&a);
        for r in 0..3 {
            for c in 0..2 {
                let v: f64 = (0..2).map(|k| d.u.get(r, k) * d.s[k] * d.v.get(c, k)).sum();
                assert!((v - a.get(r, c)).abs() < 1e-12);
            }
        }
        assert!(d.s[0] >= d.s[1]);
    }

    #[test]
    fn overdetermined_consistent() {
        let a = matrix(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let sol = lstsq(&a, &[1.0, 2.0, 3.0], 1e-12);
        assert_eq!(sol.rank, 2);
        assert!((sol.x[0] - 1.0).abs() < 1e-12 && (sol.x[1] - 2.0).abs() < 1e-12);
        assert!(sol.residual < 1e-12);
    }

    #[test]
    fn rank_deficient_gives_minimum_norm_and_kernel() {
        let a = matrix(2, 2, &[1.0, 1.0, 2.0, 2.0]);
        let sol = lstsq(&a, &[2.0, 4.0], 1e-12);
        assert_eq!(sol.rank, 1);
        assert!((sol.x[0] - 1.0).abs() < 1e-12 && (sol.x[1] - 1.0).abs() < 1e-12);
        let k = &sol.null_space[0];
        assert!((k[0] + k[1]).abs() < 1e-12);
    }

    #[test]
    fn wide_matrix() {
        let a = matrix(1, 3, &[1.0, 2.0, 2.0]);
        let sol = lstsq(&a, &[9.0], 1e-12);
        assert_eq!(sol.rank, 1);
        assert!((sol.x[0] - 1.0).abs() < 1e-12 && (sol.x[1] - 2.0).abs() < 1e-12);
        assert_eq!(sol.null_space.len(), 2);
    }
}
