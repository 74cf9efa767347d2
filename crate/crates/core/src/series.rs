//! The ascending series `Σ_k (z²/4)^k / (k! (1∓ν)_k)`.

use crate::{ComplexValue, Error, Result, SheetPoint};

/// Relative size of the last term at which summation stops.
pub const TERM_CUTOFF: f64 = 1e-18;
/// Term cap; hitting it clears `truncation_ok` but is not an error.
pub const MAX_TERMS: usize = 100;

const POCHHAMMER_TOL: f64 = 1e-12;

/// Which of the two series: `Minus` sums over `(1−ν)_k`, `Plus` over `(1+ν)_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesSign {
    Minus,
    Plus,
}

impl SeriesSign {
    fn base(self, nu: ComplexValue) -> ComplexValue {
        match self {
            SeriesSign::Minus => 1.0 - nu,
            SeriesSign::Plus => 1.0 + nu,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexValue,
    /// `Σ 2k·term_k`, the derivative of the sum with respect to `w = log z`.
    pub derivative: ComplexValue,
    /// Largest term modulus seen, a gauge of cancellation.
    pub max_term: f64,
    pub terms_used: usize,
    pub truncation_ok: bool,
}

/// Sums the series with denominators `k! (a)_k`, `a = 1∓ν`, at `z = exp(w)`.
///
/// `z²/4` is formed as `exp(2w − 2 log 2)` so the result depends on `w`
/// only, not on a branch of `z`.
pub fn kummer_series(sign: SeriesSign, nu: ComplexValue, w: SheetPoint) -> Result<SeriesResult> {
    let a = sign.base(nu);
    let q = (2.0 * w.log() - 2.0 * std::f64::consts::LN_2).exp();
    sum(a, q)
}

fn sum(a: ComplexValue, q: ComplexValue) -> Result<SeriesResult> {
    let mut term = ComplexValue::new(1.0, 0.0);
    let mut value = term;
    let mut derivative = ComplexValue::new(0.0, 0.0);
    let mut max_term = 1.0_f64;
    let mut terms_used = 1;
    let mut truncation_ok = false;

    for k in 1..MAX_TERMS {
        // (a)_k = (a)_{k-1} · (a + k − 1)
        let factor = a + (k - 1) as f64;
        if factor.norm() < POCHHAMMER_TOL {
            return Err(Error::DegeneratePochhammer(a, k));
        }
        term *= q / (factor * k as f64);
        value += term;
        derivative += 2.0 * k as f64 * term;
        terms_used = k + 1;
        max_term = max_term.max(term.norm());
        if term.norm() < TERM_CUTOFF * value.norm() {
            truncation_ok = true;
            break;
        }
    }

    Ok(SeriesResult {
        value,
        derivative,
        max_term,
        terms_used,
        truncation_ok,
    })
}
