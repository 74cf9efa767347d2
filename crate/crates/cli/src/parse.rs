//! Value grammars for orders, angles and coordinate pairs.

use std::f64::consts::PI;

use kzero::ComplexValue;

fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not a finite number: {s:?}"))
    }
}

/// An angle: `Fpi`, `p/qpi`, `pi`, or plain radians.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let Some(head) = t.strip_suffix("pi") else {
        return real(t);
    };
    let factor = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => match head.split_once('/') {
            Some((p, q)) => {
                let q = real(q)?;
                if q == 0.0 {
                    return Err(format!("zero denominator in {s:?}"));
                }
                real(p)? / q
            }
            None => real(head)?,
        },
    };
    Ok(factor * PI)
}

/// A complex order: `a+bi`, `bi`, `M@A` with `A` an angle, or a bare real.
pub fn parse_nu(s: &str) -> Result<ComplexValue, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty order".into());
    }
    if let Some((m, a)) = t.split_once('@') {
        let m = real(m)?;
        if m < 0.0 {
            return Err(format!("negative modulus in {s:?}"));
        }
        return Ok(ComplexValue::from_polar(m, parse_angle(a)?));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(ComplexValue::new(real(&t)?, 0.0));
    };
    // Split at the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (real(&body[..k])?, imag_coefficient(&body[k..])?),
        None => (0.0, imag_coefficient(body)?),
    };
    Ok(ComplexValue::new(re, im))
}

fn imag_coefficient(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => real(s),
    }
}

/// `x,y` or a single `x` (taken as `x,0`).
pub fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    match s.split_once(',') {
        Some((a, b)) => Ok((real(a)?, real(b)?)),
        None => Ok((real(s)?, 0.0)),
    }
}

/// `a:b` with each side an angle.
pub fn parse_angle_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected from:to, got {s:?}"))?;
    Ok((parse_angle(a)?, parse_angle(b)?))
}

/// `a:b` with positive reals.
pub fn parse_modulus_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected from:to, got {s:?}"))?;
    let (a, b) = (real(a)?, real(b)?);
    if a <= 0.0 || b <= 0.0 {
        return Err(format!("moduli must be positive in {s:?}"));
    }
    Ok((a, b))
}
