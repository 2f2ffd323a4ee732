//! Three lines interpolated by a Bennett motion, with the printed results.

use ruled_motion::{DualQuat, PluckerLine, Quat, Tolerance};

pub fn lines() -> [PluckerLine<f64>; 3] {
    let l = |d: [f64; 3], m: [f64; 3]| PluckerLine::with_tolerance(d, m, Tolerance::new(1e-8)).unwrap();
    [
        l([-0.5692893982, 0.1879452202, 0.8003662757], [2.394938124, -1.698415049, 2.102314808]),
        l([-0.9543899389, 0.1373020929, 0.2651188032], [0.8624265591, 1.131167268, 2.518793799]),
        l([-0.9834592139, -0.04634208347, -0.1751010735], [-0.4177553080, 2.772307919, 1.612615937]),
    ]
}

pub const KNOTS: [f64; 3] = [-1.0, 0.0, 1.0];

fn q(w: f64, x: f64, y: f64, z: f64) -> Quat<f64> {
    Quat::new(w, x, y, z)
}

pub fn preimages() -> [Quat<f64>; 3] {
    [
        q(0.0, -0.3000113351, 0.09904575183, 0.9487798153),
        q(0.0, -0.5999916401, 0.08631703309, 0.7953360307),
        q(0.0, -0.7656688635, -0.03607947323, 0.6422222851),
    ]
}

/// Coefficients of the dual part, lowest power first.
pub fn dual_part() -> [Quat<f64>; 3] {
    [
        q(-10.49908633, 0.0, 7.295181813, -0.7917388696),
        q(2.837641695, -0.4807564566, 1.302422976, -0.0368980596),
        q(-0.9525313145, -0.4263398024, -0.521506355, 0.2008885718),
    ]
}

pub fn leading() -> DualQuat<f64> {
    DualQuat::new(
        q(0.0, 0.0671515410, -0.05483389380, 0.0001650193),
        q(-0.9525313145, -0.4263398024, -0.5215063550, 0.2008885718),
    )
}

/// `[h1, h2]` and `[k1, k2]`, right factor last.
pub fn factor_roots() -> ([DualQuat<f64>; 2], [DualQuat<f64>; 2]) {
    let h1 = DualQuat::new(q(3.437729498, 0.4245869672, -0.6826178148, -1.925681116), q(0.0, -39.06204587, -23.42489306, -0.3089744570));
    let h2 = DualQuat::new(q(-1.847095642, 0.6951435567, 2.046951289, -0.3765517306), q(0.0, 47.58933550, -20.43787422, -23.24757084));
    let k1 = DualQuat::new(q(-1.847095642, 1.867767136, 1.089422750, -0.3736701032), q(0.0, 23.23952734, -50.18964901, -30.16489659));
    let k2 = DualQuat::new(q(3.437729498, -0.7480366121, 0.2749107239, -1.928562744), q(0.0, -14.71223772, 6.326881730, 6.608351290));
    ([h1, h2], [k1, k2])
}

pub fn rel(a: &Quat<f64>, b: &Quat<f64>) -> f64 {
    (a - b).max_abs() / b.max_abs().max(1e-300)
}

pub fn dq_rel(a: &DualQuat<f64>, b: &DualQuat<f64>) -> f64 {
    rel(&a.primal, &b.primal).max(rel(&a.dual, &b.dual))
}
