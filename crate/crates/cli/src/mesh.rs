//! Wavefront OBJ export of a ruled surface and a set of lines.

use std::f64::consts::PI;
use std::fmt::Write;

use ruled_motion::{LinePoly, PluckerLine};

#[derive(Clone, Copy, Debug)]
pub struct MeshOptions {
    /// Rulings sampled over the whole parameter line.
    pub samples: usize,
    /// Half edge of the clipping box centered at the origin.
    pub clip: f64,
}

/// Part of the line inside `[-r, r]^3`, as two end points.
fn clip_line(line: &PluckerLine<f64>, r: f64) -> Option<[[f64; 3]; 2]> {
    let n = line.direction_norm_f64();
    if n == 0.0 {
        return None;
    }
    let d = line.direction.map(|c| c / n);
    let p = line.foot_point_f64();
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..3 {
        if d[i].abs() < 1e-15 {
            if p[i].abs() > r {
                return None;
            }
            continue;
        }
        let a = (-r - p[i]) / d[i];
        let b = (r - p[i]) / d[i];
        lo = lo.max(a.min(b));
        hi = hi.min(a.max(b));
    }
    if lo >= hi {
        return None;
    }
    let at = |s: f64| [p[0] + s * d[0], p[1] + s * d[1], p[2] + s * d[2]];
    Some([at(lo), at(hi)])
}

fn vertex(out: &mut String, v: &[f64; 3]) {
    let _ = writeln!(out, "v {} {} {}", v[0], v[1], v[2]);
}

/// Rulings at `t = tan(theta)` for equally spaced `theta`, joined by quads,
/// plus each extra line as an `l` element.
pub fn ruled_surface_obj(surface: &LinePoly<f64>, lines: &[PluckerLine<f64>], opts: MeshOptions) -> String {
    let mut out = String::from("# ruled surface\no surface\n");
    let mut count = 0usize;
    let mut prev: Option<usize> = None;
    for i in 0..opts.samples {
        let theta = -PI / 2.0 + PI * (i as f64 + 0.5) / opts.samples as f64;
        let seg = surface.eval(&theta.tan()).ok().and_then(|l| clip_line(&l, opts.clip));
        match seg {
            Some([a, b]) => {
                vertex(&mut out, &a);
                vertex(&mut out, &b);
                let first = count + 1;
                count += 2;
                if let Some(p) = prev {
                    let _ = writeln!(out, "f {} {} {} {}", p, p + 1, first + 1, first);
                }
                prev = Some(first);
            }
            None => prev = None,
        }
    }
    for (n, l) in lines.iter().enumerate() {
        if let Some([a, b]) = clip_line(l, opts.clip) {
            let _ = writeln!(out, "o axis{}", n + 1);
            vertex(&mut out, &a);
            vertex(&mut out, &b);
            count += 2;
            let _ = writeln!(out, "l {} {}", count - 1, count);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ruled_motion::{Poly, QuatPoly};

    #[test]
    fn clipping() {
        let l = PluckerLine { direction: [0.0, 0.0, 2.0], moment: [0.0, -1.0, 0.0] };
        // through (1/2, 0, 0) along k
        let [a, b] = clip_line(&l, 1.0).unwrap();
        assert!((a[0] - 0.5).abs() < 1e-12 && (a[2] + 1.0).abs() < 1e-12 && (b[2] - 1.0).abs() < 1e-12);
        let far = PluckerLine { direction: [0.0, 0.0, 1.0], moment: [0.0, -5.0, 0.0] };
        assert!(clip_line(&far, 1.0).is_none());
    }

    #[test]
    fn hyperboloid_strips() {
        // rulings (1 - t^2, 2t, 1 + t^2) through points on the unit circle
        let p = |c: &[f64]| Poly::from_coeffs(c.to_vec());
        let lp = QuatPoly::vector(p(&[1.0, 0.0, -1.0]), p(&[0.0, 2.0]), p(&[1.0, 0.0, 1.0]));
        let ld = QuatPoly::vector(p(&[0.0, 2.0]), p(&[-1.0, 0.0, 1.0]), Poly::zero());
        let line = ruled_motion::validate_line_poly(lp, ld, Default::default()).unwrap();
        let obj = ruled_surface_obj(&line, &[PluckerLine::k()], MeshOptions { samples: 8, clip: 10.0 });
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 7);
        assert_eq!(obj.lines().filter(|l| l.starts_with("l ")).count(), 1);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 18);
    }
}
