use ruled_motion::{
    extract_right_factor_quadratic, factor_into_linear, interpolate_three_lines, is_kinematic, is_reduced,
    minimality_check, norm_quadratics, peel_translation_factor, saturation_analysis, solution_family, synthesize,
    verify_solution, Factorization, InterpolationOptions, LinePoly, LinearFactor, MotionPoly, PluckerLine,
    Poly, Quat, Rational, Scalar, SynthesisOptions, Tolerance,
};
use serde_json::{json, Value};

use crate::expr::parse_poly;
use crate::failure::{code, Failure};
use crate::mesh::{ruled_surface_obj, MeshOptions};
use crate::wire::{self, document, poly_json, Coeff, Mode};

/// Result document and exit code.
pub type Outcome = Result<(Value, u8), Failure>;

fn text<S: Scalar>(p: &Poly<S>) -> Value {
    Value::String(p.to_string())
}

pub fn analyze(doc: &Value, mode: Mode, tol: Tolerance) -> Outcome {
    match mode {
        Mode::Exact => {
            let line: LinePoly<Rational> = wire::line(doc, tol)?;
            let (kinematic, _) = is_kinematic(&line);
            let degree = line.degree().finite().unwrap_or(0);
            let mut fields = vec![("kinematic", json!(kinematic)), ("reduced", json!(is_reduced(&line))), ("degree", json!(degree))];
            if kinematic {
                let rep = saturation_analysis(&line)?;
                fields.extend([
                    ("saturated", json!(rep.is_saturated)),
                    ("g", text(&rep.g)),
                    ("ell", text(&rep.ell)),
                    ("sigma", text(&rep.sigma)),
                    ("coefficients", json!({"g": poly_json(&rep.g), "ell": poly_json(&rep.ell), "sigma": poly_json(&rep.sigma)})),
                ]);
            }
            Ok((document(mode, fields), code::OK))
        }
        Mode::Float => {
            let line: LinePoly<f64> = wire::line(doc, tol)?;
            let (kinematic, sigma) = is_kinematic(&line);
            let mut fields = vec![("kinematic", json!(kinematic)), ("degree", json!(line.degree().finite().unwrap_or(0)))];
            if let Some(s) = sigma {
                fields.extend([("sigma", text(&s)), ("coefficients", json!({"sigma": poly_json(&s)}))]);
            }
            Ok((document(mode, fields), code::OK))
        }
    }
}

pub struct SynthesisFlags {
    pub inject_q: Option<Value>,
    pub seed: u64,
    pub nu: Option<String>,
    pub unit: Option<String>,
}

fn parse_unit(s: &str) -> Result<Quat<Rational>, Failure> {
    let (a, b) = s.split_once(',').ok_or_else(|| Failure::parse("--unit expects v0,v3"))?;
    let r = |x: &str| Rational::parse(x.trim()).ok_or_else(|| Failure::parse(format!("--unit: cannot read {x:?}")));
    Ok(Quat::new(r(a)?, Rational::zero(), Rational::zero(), r(b)?))
}

pub fn synthesize_cmd(doc: &Value, mode: Mode, flags: &SynthesisFlags) -> Outcome {
    if mode != Mode::Exact {
        return Err(Failure::parse("synthesis needs exact rational input"));
    }
    let tol = Tolerance::default();
    let line: LinePoly<Rational> = wire::line(doc, tol)?;
    let inject_q = match &flags.inject_q {
        Some(q) => {
            let body = q.get("q").ok_or_else(|| Failure::parse("--inject-q: missing field \"q\""))?;
            Some(wire::quat_poly(body, "q")?)
        }
        None => None,
    };
    let res = synthesize(&line, &SynthesisOptions { inject_q, seed: flags.seed })?;
    let motion = if flags.nu.is_some() || flags.unit.is_some() {
        let nu = match &flags.nu {
            Some(s) => parse_poly(s)?,
            None => Poly::zero(),
        };
        let unit = match &flags.unit {
            Some(s) => parse_unit(s)?,
            None => Quat::one(),
        };
        solution_family(&res, &nu, &unit)?
    } else {
        res.motion.clone()
    };
    let m = minimality_check(&motion, &line)?;
    let fields = vec![
        ("motion", wire::motion_json(&motion)),
        ("line", wire::line_json(&line)),
        ("h", text(&res.h)),
        ("c", Value::String(res.c.render())),
        ("ell", text(&res.ell)),
        ("degree", json!(motion.degree().finite().unwrap_or(0))),
        ("minimal", json!(m.minimal)),
        ("unique", json!(m.unique)),
        ("family_translation_degree", json!(res.family_translation_degree)),
        ("rotation", wire::quat_json(&res.rotation_applied)),
        ("coefficients", json!({"h": poly_json(&res.h), "ell": poly_json(&res.ell)})),
    ];
    Ok((document(mode, fields), code::OK))
}

fn verify_in<S: Coeff>(doc: &Value, line_doc: &Value, mode: Mode, tol: Tolerance) -> Outcome {
    let motion: MotionPoly<S> = wire::motion(doc, tol)?;
    let line: LinePoly<S> = wire::line(line_doc, tol)?;
    match verify_solution(&motion, &line, tol) {
        Ok(v) => {
            let fields = vec![
                ("ok", json!(true)),
                ("h", text(&v.h)),
                ("c", Value::String(v.c.render())),
                ("coefficients", json!({"h": poly_json(&v.h)})),
            ];
            Ok((document(mode, fields), code::OK))
        }
        Err(ruled_motion::Error::VerificationFailure { residual }) => {
            Ok((document(mode, vec![("ok", json!(false)), ("residual", json!(residual))]), code::VERIFY))
        }
        Err(e) => Err(e.into()),
    }
}

/// `line_doc` defaults to `doc` itself.
pub fn verify(doc: &Value, line_doc: Option<&Value>, mode: Mode, tol: Tolerance) -> Outcome {
    let line_doc = line_doc.unwrap_or(doc);
    match mode {
        Mode::Exact => verify_in::<Rational>(doc, line_doc, mode, tol),
        Mode::Float => verify_in::<f64>(doc, line_doc, mode, tol),
    }
}

fn axis_json<S: Coeff>(f: &LinearFactor<S>) -> Value {
    let a = f.axis();
    wire::plucker_json(&PluckerLine { direction: a.primal.vector_part(), moment: a.dual.vector_part() })
}

fn factor_json<S: Coeff>(f: &LinearFactor<S>) -> Value {
    json!({"h": wire::dual_quat_json(&f.h), "norm": text(&f.norm()), "axis": axis_json(f)})
}

fn factorization_json<S: Coeff>(c: &MotionPoly<S>, order: &[Poly<S>], f: &Factorization<S>) -> Value {
    let residual = (&f.product() - c.inner()).max_abs() / c.inner().max_abs();
    json!({
        "order": order.iter().map(text).collect::<Vec<_>>(),
        "leading": wire::dual_quat_json(&f.leading),
        "factors": f.factors.iter().map(factor_json).collect::<Vec<_>>(),
        "residual": residual,
    })
}

pub struct FactorFlags {
    pub order: Vec<String>,
    pub peel_translation: Option<String>,
}

fn factor_in<S: Coeff>(doc: &Value, mode: Mode, tol: Tolerance, flags: &FactorFlags, norms: Vec<Poly<S>>) -> Outcome {
    let c: MotionPoly<S> = wire::motion(doc, tol)?;
    if let Some(spec) = &flags.peel_translation {
        let (f, m) = spec.rsplit_once(',').ok_or_else(|| Failure::parse("--peel-translation expects POLY,M"))?;
        let f: Poly<S> = parse_poly(f)?;
        let m: u32 = m.trim().parse().map_err(|_| Failure::parse(format!("--peel-translation: bad multiplicity {m:?}")))?;
        let (rest, e) = peel_translation_factor(&c, &f, m)?;
        let fields = vec![("rest", wire::motion_json(&rest)), ("translation_factor", wire::motion_json(&e))];
        return Ok((document(mode, fields), code::OK));
    }
    let orders: Vec<Vec<Poly<S>>> = if !flags.order.is_empty() {
        vec![flags.order.iter().map(|s| parse_poly(s)).collect::<Result<_, _>>()?]
    } else if norms.is_empty() {
        return Err(Failure::parse("exact factorization needs --order"));
    } else if norms.len() == 2 {
        vec![norms.clone(), vec![norms[1].clone(), norms[0].clone()]]
    } else {
        vec![norms]
    };
    let degree = c.degree().finite().unwrap_or(0);
    if orders[0].len() < degree {
        // partial: C = rest * (t - h_k) ... (t - h_1)
        let mut rest = c.clone();
        let mut factors = Vec::new();
        for f in &orders[0] {
            let (r, e) = extract_right_factor_quadratic(&rest, f, tol)?;
            rest = r;
            factors.push(e);
        }
        factors.reverse();
        let fields = vec![
            ("rest", wire::motion_json(&rest)),
            ("factors", Value::Array(factors.iter().map(factor_json).collect())),
        ];
        return Ok((document(mode, fields), code::OK));
    }
    let mut out = Vec::new();
    for order in &orders {
        let f = factor_into_linear(&c, order, tol)?;
        out.push(factorization_json(&c, order, &f));
    }
    Ok((document(mode, vec![("factorizations", Value::Array(out))]), code::OK))
}

pub fn factor(doc: &Value, mode: Mode, tol: Tolerance, flags: &FactorFlags) -> Outcome {
    match mode {
        Mode::Exact => factor_in::<Rational>(doc, mode, tol, flags, Vec::new()),
        Mode::Float => {
            let norms = if flags.order.is_empty() && flags.peel_translation.is_none() {
                let c: MotionPoly<f64> = wire::motion(doc, tol)?;
                norm_quadratics(&c, tol)?
            } else {
                Vec::new()
            };
            factor_in::<f64>(doc, mode, tol, flags, norms)
        }
    }
}

fn triple(doc: &Value, key: &str, default: [f64; 3]) -> Result<[f64; 3], Failure> {
    match doc.get(key) {
        None => Ok(default),
        Some(v) => {
            let a = v.as_array().filter(|a| a.len() == 3).ok_or_else(|| Failure::parse(format!("{key}: expected three values")))?;
            Ok([wire::scalar(&a[0], key)?, wire::scalar(&a[1], key)?, wire::scalar(&a[2], key)?])
        }
    }
}

pub struct Interpolation {
    pub result: Value,
    pub mesh: Option<String>,
}

pub fn interpolate(doc: &Value, mode: Mode, tol: Option<Tolerance>, mesh: Option<MeshOptions>) -> Result<Interpolation, Failure> {
    if mode != Mode::Float {
        return Err(Failure::parse("interpolation needs float input"));
    }
    let mut opts = InterpolationOptions { apply_leading: true, ..Default::default() };
    if let Some(t) = tol {
        opts.tolerance = t;
    }
    let arr = doc
        .get("lines")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Failure::parse("document: expected \"lines\" with three entries"))?;
    let line_tol = Tolerance::new(opts.tolerance.abs.max(1e-8));
    let lines = [
        wire::plucker(&arr[0], "lines[0]", line_tol)?,
        wire::plucker(&arr[1], "lines[1]", line_tol)?,
        wire::plucker(&arr[2], "lines[2]", line_tol)?,
    ];
    let knots = triple(doc, "knots", [-1.0, 0.0, 1.0])?;
    let weights = triple(doc, "weights", [1.0; 3])?;
    opts.phis = triple(doc, "phis", [0.0; 3])?;
    let res = interpolate_three_lines(&lines, knots, weights, &opts)?;
    let r = &res.residuals;
    let factors = |fs: &[LinearFactor<f64>; 2]| Value::Array(fs.iter().map(|f| json!({"h": wire::dual_quat_json(&f.h)})).collect());
    let fields = vec![
        ("motion", wire::motion_json(&res.motion)),
        ("line", wire::line_json(&res.line)),
        ("preimages", Value::Array(res.preimages.iter().map(wire::quat_json).collect())),
        ("leading", wire::dual_quat_json::<f64>(&res.leading)),
        ("norm_factors", Value::Array(res.norm_factors.iter().map(text).collect())),
        ("factorization_a", factors(&res.factorization_a)),
        ("factorization_b", factors(&res.factorization_b)),
        ("axes", Value::Array(res.axes.iter().map(wire::plucker_json).collect())),
        (
            "residuals",
            json!({
                "line_dual": r.line_dual,
                "line_dual_at_knots": r.line_dual_at_knots,
                "motion_dual": r.motion_dual,
                "motion_dual_rank": r.motion_dual_rank,
                "knots": r.knots,
                "factorization_a": r.factorization_a,
                "factorization_b": r.factorization_b,
            }),
        ),
    ];
    let mesh = mesh.map(|m| ruled_surface_obj(&res.line, &res.axes, m));
    Ok(Interpolation { result: document(mode, fields), mesh })
}
