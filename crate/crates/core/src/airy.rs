//! Real Airy function `Ai`, its derivative, and the negative zeros `a_s`.
//!
//! The Maclaurin series are summed in double-double arithmetic: on the
//! negative axis the individual terms grow to ~1e14 near `x = −13.5` while
//! `Ai` itself stays below 1, and plain `f64` summation would lose most of
//! the digits.

use std::f64::consts::PI;
use std::sync::OnceLock;

use twofloat::TwoFloat;

use crate::{Error, Result};

/// Largest `|x|` accepted by [`airy_ai`] and [`airy_ai_prime`].
pub const MAX_ABS_X: f64 = 13.5;
/// Number of tabulated zeros.
pub const MAX_ZERO_INDEX: usize = 10;

/// `Ai(0) = 3^{−2/3}/Γ(2/3)`
const AI_0: f64 = 0.355_028_053_887_817_24;
/// `−Ai′(0) = 3^{−1/3}/Γ(1/3)`
const MINUS_AI_PRIME_0: f64 = 0.258_819_403_792_806_8;

const MAX_SERIES_TERMS: usize = 300;

fn check_range(x: f64) -> Result<()> {
    if !(x.abs() <= MAX_ABS_X) {
        return Err(Error::Range {
            arg: format!("x = {x}"),
            range: "|x| <= 13.5",
        });
    }
    Ok(())
}

fn negligible(term: TwoFloat, sum: TwoFloat, k: usize) -> bool {
    k > 2 && term.abs() <= TwoFloat::from(1e-33) * sum.abs().max(TwoFloat::from(1.0))
}

pub fn airy_ai(x: f64) -> Result<f64> {
    check_range(x)?;
    let xx = TwoFloat::from(x);
    let x3 = xx * xx * xx;

    // f = Σ 3^k (1/3)_k x^{3k}/(3k)!,  g = Σ 3^k (2/3)_k x^{3k+1}/(3k+1)!
    let mut tf = TwoFloat::from(1.0);
    let mut f = tf;
    let mut tg = xx;
    let mut g = tg;
    for k in 1..MAX_SERIES_TERMS {
        let k3 = (3 * k) as f64;
        tf = tf * x3 / ((k3 - 1.0) * k3);
        tg = tg * x3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        if negligible(tf, f, k) && negligible(tg, g, k) {
            break;
        }
    }
    Ok(f64::from(f * AI_0 - g * MINUS_AI_PRIME_0))
}

pub fn airy_ai_prime(x: f64) -> Result<f64> {
    check_range(x)?;
    let xx = TwoFloat::from(x);
    let x3 = xx * xx * xx;

    // f′ = Σ_{k≥1} 3^k (1/3)_k x^{3k−1}/(3k−1)!,  g′ = Σ 3^k (2/3)_k x^{3k}/(3k)!
    let mut tf = xx * xx / 2.0;
    let mut fp = tf;
    let mut tg = TwoFloat::from(1.0);
    let mut gp = tg;
    for k in 1..MAX_SERIES_TERMS {
        let k3 = (3 * k) as f64;
        if k >= 2 {
            tf = tf * x3 / ((k3 - 1.0) * (k3 - 3.0));
            fp += tf;
        }
        tg = tg * x3 / (k3 * (k3 - 2.0));
        gp += tg;
        if negligible(tf, fp, k) && negligible(tg, gp, k) {
            break;
        }
    }
    Ok(f64::from(fp * AI_0 - gp * MINUS_AI_PRIME_0))
}

/// The `s`-th zero of `Ai`, `a_1 > a_2 > … `, all negative.
pub fn airy_zero(s: usize) -> Result<f64> {
    if s == 0 || s > MAX_ZERO_INDEX {
        return Err(Error::Range {
            arg: format!("s = {s}"),
            range: "1 <= s <= 10",
        });
    }
    Ok(AiryZeroTable::get().zeros[s - 1])
}

/// Newton on the series, seeded with `−(3π(4s−1)/8)^{2/3}`.
fn newton_zero(s: usize) -> f64 {
    let mut x = -(3.0 * PI * (4 * s - 1) as f64 / 8.0).powf(2.0 / 3.0);
    for _ in 0..50 {
        let step =
            airy_ai(x).expect("seed inside range") / airy_ai_prime(x).expect("seed inside range");
        x -= step;
        if step.abs() < 1e-15 * x.abs() {
            break;
        }
    }
    x
}

#[derive(Debug, Clone)]
pub struct AiryZeroTable {
    pub zeros: Vec<f64>,
}

impl AiryZeroTable {
    pub fn get() -> &'static AiryZeroTable {
        static TABLE: OnceLock<AiryZeroTable> = OnceLock::new();
        TABLE.get_or_init(|| AiryZeroTable {
            zeros: (1..=MAX_ZERO_INDEX).map(newton_zero).collect(),
        })
    }
}
