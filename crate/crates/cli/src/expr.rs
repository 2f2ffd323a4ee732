//! Polynomials written by hand on the command line: `t^2-6t+10`,
//! `1/2*t - 3`, `0.25t^2+1`.

use ruled_motion::Poly;

use crate::failure::Failure;
use crate::wire::Coeff;

fn term<S: Coeff>(body: &str, negative: bool, src: &str) -> Result<(usize, S), Failure> {
    let bad = || Failure::parse(format!("cannot read polynomial {src:?}"));
    let (coef, power) = match body.find('t') {
        None => (body, 0),
        Some(pos) => {
            let power = match &body[pos + 1..] {
                "" => 1,
                rest => rest.strip_prefix('^').and_then(|p| p.parse().ok()).ok_or_else(bad)?,
            };
            (body[..pos].strip_suffix('*').unwrap_or(&body[..pos]), power)
        }
    };
    let c = if coef.is_empty() {
        if power == 0 {
            return Err(bad());
        }
        S::one()
    } else {
        S::parse(coef).ok_or_else(bad)?
    };
    Ok((power, if negative { -c } else { c }))
}

pub fn parse_poly<S: Coeff>(src: &str) -> Result<Poly<S>, Failure> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Failure::parse("empty polynomial"));
    }
    let mut coeffs: Vec<S> = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i <= bytes.len() {
        // a sign splits terms unless it belongs to an exponent
        let split = i == bytes.len() || (i > start && matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
        if split {
            let chunk = &s[start..i];
            let (negative, body) = match chunk.as_bytes().first() {
                Some(b'-') => (true, &chunk[1..]),
                Some(b'+') => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            let (power, c) = term::<S>(body, negative, src)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, S::zero());
            }
            coeffs[power] += &c;
            start = i;
        }
        i += 1;
    }
    Ok(Poly::from_coeffs(coeffs))
}
