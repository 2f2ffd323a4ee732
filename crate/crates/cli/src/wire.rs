//! JSON wire format.
//!
//! Polynomials are arrays of coefficient strings in ascending degree, or
//! objects `{"coeffs": [...], "mode": "exact" | "float"}`. Exact
//! coefficients are `"p/q"` or integer strings, float coefficients decimal
//! literals. One document never mixes the two.

use ruled_motion::{
    parse_rational, DualQuat, DualQuatPoly, LinePoly, MotionPoly, PluckerLine, Poly, Quat, QuatPoly, Rational, Scalar,
    Tolerance,
};
use serde_json::{json, Map, Value};

use crate::failure::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }

    fn parse(s: &str) -> Result<Mode, Failure> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Failure::parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// Coefficient field as seen on the wire.
pub trait Coeff: Scalar {
    const MODE: Mode;
    fn parse(s: &str) -> Option<Self>;
    fn render(&self) -> String;
}

impl Coeff for Rational {
    const MODE: Mode = Mode::Exact;

    fn parse(s: &str) -> Option<Self> {
        parse_rational(s)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Coeff for f64 {
    const MODE: Mode = Mode::Float;

    fn parse(s: &str) -> Option<Self> {
        if s.contains('/') {
            return None;
        }
        s.trim().parse().ok()
    }

    fn render(&self) -> String {
        // Debug is shortest-roundtrip and keeps a decimal point
        format!("{self:?}")
    }
}

fn looks_float(s: &str) -> bool {
    !s.contains('/') && s.trim().parse::<f64>().is_ok() && parse_rational(s).is_none()
}

fn collect_strings<'a>(v: &'a Value, out: &mut Vec<&'a str>) {
    match v {
        Value::String(s) => out.push(s),
        Value::Array(a) => a.iter().for_each(|x| collect_strings(x, out)),
        Value::Object(o) => {
            for (k, x) in o {
                if k != "mode" {
                    collect_strings(x, out);
                }
            }
        }
        _ => {}
    }
}

fn collect_modes(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Array(a) => a.iter().for_each(|x| collect_modes(x, out)),
        Value::Object(o) => {
            for (k, x) in o {
                match (k.as_str(), x) {
                    ("mode", Value::String(s)) => out.push(s.clone()),
                    _ => collect_modes(x, out),
                }
            }
        }
        _ => {}
    }
}

/// Mode of `doc`: the flag, else declared modes, else inferred from the
/// coefficient strings.
pub fn resolve_mode(doc: &Value, flag: Option<Mode>) -> Result<Mode, Failure> {
    let mut declared = Vec::new();
    collect_modes(doc, &mut declared);
    let mut mode = flag;
    for d in declared {
        let m = Mode::parse(&d)?;
        match mode {
            Some(prev) if prev != m => {
                return Err(Failure::parse(format!("mixed modes: {} and {}", prev.name(), m.name())));
            }
            _ => mode = Some(m),
        }
    }
    let mut strings = Vec::new();
    collect_strings(doc, &mut strings);
    let has_float = strings.iter().any(|s| looks_float(s));
    let has_ratio = strings.iter().any(|s| s.contains('/'));
    match mode {
        Some(Mode::Exact) if has_float => Err(Failure::parse("decimal coefficient in an exact document")),
        Some(Mode::Float) if has_ratio => Err(Failure::parse("rational coefficient in a float document")),
        Some(m) => Ok(m),
        None if has_float && has_ratio => Err(Failure::parse("document mixes exact and float coefficients")),
        None if has_float => Ok(Mode::Float),
        None => Ok(Mode::Exact),
    }
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| Failure::parse(format!("{path}: missing field {key:?}")))
}

pub fn scalar<S: Coeff>(v: &Value, path: &str) -> Result<S, Failure> {
    let s = v.as_str().ok_or_else(|| Failure::parse(format!("{path}: coefficients must be strings")))?;
    S::parse(s).ok_or_else(|| Failure::parse(format!("{path}: cannot read {s:?} as a {} coefficient", S::MODE.name())))
}

pub fn poly<S: Coeff>(v: &Value, path: &str) -> Result<Poly<S>, Failure> {
    let coeffs = match v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Failure::parse(format!("{path}: expected a coefficient array")))?,
        _ => return Err(Failure::parse(format!("{path}: expected a polynomial"))),
    };
    let cs = coeffs.iter().enumerate().map(|(i, c)| scalar(c, &format!("{path}[{i}]"))).collect::<Result<_, _>>()?;
    Ok(Poly::from_coeffs(cs))
}

fn opt_poly<S: Coeff>(v: &Value, key: &str, path: &str) -> Result<Poly<S>, Failure> {
    match v.get(key) {
        Some(p) => poly(p, &format!("{path}.{key}")),
        None => Ok(Poly::zero()),
    }
}

pub fn vector_poly<S: Coeff>(v: &Value, path: &str) -> Result<QuatPoly<S>, Failure> {
    if v.get("w").is_some() {
        return Err(Failure::parse(format!("{path}: line coordinates have no w component")));
    }
    Ok(QuatPoly::vector(opt_poly(v, "x", path)?, opt_poly(v, "y", path)?, opt_poly(v, "z", path)?))
}

pub fn quat_poly<S: Coeff>(v: &Value, path: &str) -> Result<QuatPoly<S>, Failure> {
    Ok(QuatPoly::new(opt_poly(v, "w", path)?, opt_poly(v, "x", path)?, opt_poly(v, "y", path)?, opt_poly(v, "z", path)?))
}

pub fn line<S: Coeff>(doc: &Value, tol: Tolerance) -> Result<LinePoly<S>, Failure> {
    let l = field(doc, "line", "document")?;
    let primal = vector_poly(field(l, "primal", "line")?, "line.primal")?;
    let dual = match l.get("dual") {
        Some(d) => vector_poly(d, "line.dual")?,
        None => QuatPoly::zero(),
    };
    ruled_motion::validate_line_poly(primal, dual, tol).map_err(Failure::geometry)
}

pub fn motion<S: Coeff>(doc: &Value, tol: Tolerance) -> Result<MotionPoly<S>, Failure> {
    let m = field(doc, "motion", "document")?;
    let primal = quat_poly(field(m, "primal", "motion")?, "motion.primal")?;
    let dual = match m.get("dual") {
        Some(d) => quat_poly(d, "motion.dual")?,
        None => QuatPoly::zero(),
    };
    MotionPoly::with_tolerance(DualQuatPoly::new(primal, dual), tol).map_err(Failure::geometry)
}

fn array3<S: Coeff>(v: &Value, path: &str) -> Result<[S; 3], Failure> {
    let a = v.as_array().filter(|a| a.len() == 3).ok_or_else(|| Failure::parse(format!("{path}: expected three coordinates")))?;
    Ok([scalar(&a[0], path)?, scalar(&a[1], path)?, scalar(&a[2], path)?])
}

pub fn plucker<S: Coeff>(v: &Value, path: &str, tol: Tolerance) -> Result<PluckerLine<S>, Failure> {
    let d = array3(field(v, "direction", path)?, &format!("{path}.direction"))?;
    let m = array3(field(v, "moment", path)?, &format!("{path}.moment"))?;
    PluckerLine::with_tolerance(d, m, tol).map_err(Failure::geometry)
}

pub fn poly_json<S: Coeff>(p: &Poly<S>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.render())).collect())
}

pub fn quat_json<S: Coeff>(q: &Quat<S>) -> Value {
    json!({"w": q.w.render(), "x": q.x.render(), "y": q.y.render(), "z": q.z.render()})
}

pub fn dual_quat_json<S: Coeff>(q: &DualQuat<S>) -> Value {
    json!({"primal": quat_json(&q.primal), "dual": quat_json(&q.dual)})
}

pub fn quat_poly_json<S: Coeff>(q: &QuatPoly<S>) -> Value {
    json!({"w": poly_json(&q.w), "x": poly_json(&q.x), "y": poly_json(&q.y), "z": poly_json(&q.z)})
}

fn vector_poly_json<S: Coeff>(q: &QuatPoly<S>) -> Value {
    json!({"x": poly_json(&q.x), "y": poly_json(&q.y), "z": poly_json(&q.z)})
}

pub fn motion_json<S: Coeff>(m: &MotionPoly<S>) -> Value {
    json!({"primal": quat_poly_json(m.primal()), "dual": quat_poly_json(m.dual())})
}

pub fn line_json<S: Coeff>(l: &LinePoly<S>) -> Value {
    json!({"primal": vector_poly_json(l.primal()), "dual": vector_poly_json(l.dual())})
}

pub fn plucker_json<S: Coeff>(l: &PluckerLine<S>) -> Value {
    let r = |a: &[S; 3]| Value::Array(a.iter().map(|c| Value::String(c.render())).collect());
    json!({"direction": r(&l.direction), "moment": r(&l.moment)})
}

/// A document carrying `mode` and the given fields.
pub fn document(mode: Mode, fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("mode".into(), Value::String(mode.name().into()));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}
