//! `K_ν(z)` from the two ascending series, and the zero residual `E_ν`.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::gamma::{log_gamma, log_gamma_ratio};
use crate::series::{kummer_series, SeriesResult, SeriesSign};
use crate::{ComplexValue, Error, Result, SheetPoint};

/// Orders closer than this to a real integer are rejected.
pub const INTEGER_TOL: f64 = 1e-8;

/// Smallest `|dE/dw|` relative to the series size for which a vanishing
/// residual is trusted.
pub const CONDITIONING_FLOOR: f64 = 1e-8;

pub fn check_order(nu: ComplexValue) -> Result<()> {
    if !nu.re.is_finite() || !nu.im.is_finite() {
        return Err(Error::Domain(format!("non-finite order {nu}")));
    }
    let nearest = ComplexValue::new(nu.re.round(), 0.0);
    if (nu - nearest).norm() < INTEGER_TOL {
        return Err(Error::IntegerOrder(nu));
    }
    Ok(())
}

/// The two terms of `K_ν = (π/2)/sin(νπ) · (first − second)`.
#[derive(Debug, Clone, Copy)]
pub struct MacdonaldParts {
    /// `(π/2)/sin(νπ)`
    pub prefactor: ComplexValue,
    /// `(z/2)^{−ν} / Γ(1−ν) · Σ (z²/4)^k / (k!(1−ν)_k)`
    pub first: ComplexValue,
    /// `(z/2)^{ν} / Γ(1+ν) · Σ (z²/4)^k / (k!(1+ν)_k)`
    pub second: ComplexValue,
    pub minus: SeriesResult,
    pub plus: SeriesResult,
}

impl MacdonaldParts {
    pub fn value(&self) -> ComplexValue {
        self.prefactor * (self.first - self.second)
    }

    /// Larger of the two scaled terms, the size `K` is computed against.
    pub fn term_scale(&self) -> f64 {
        (self.prefactor * self.first)
            .norm()
            .max((self.prefactor * self.second).norm())
    }
}

pub fn macdonald_parts(nu: ComplexValue, w: SheetPoint) -> Result<MacdonaldParts> {
    check_order(nu)?;
    let log_half_z = w.log() - LN_2;
    let minus = kummer_series(SeriesSign::Minus, nu, w)?;
    let plus = kummer_series(SeriesSign::Plus, nu, w)?;
    let first = (-nu * log_half_z - log_gamma(1.0 - nu)?).exp() * minus.value;
    let second = (nu * log_half_z - log_gamma(1.0 + nu)?).exp() * plus.value;
    let prefactor = FRAC_PI_2 / (nu * PI).sin();
    Ok(MacdonaldParts {
        prefactor,
        first,
        second,
        minus,
        plus,
    })
}

/// `K_ν(z)` at `z = exp(w)`, on whatever sheet `w` selects.
pub fn macdonald_k(nu: ComplexValue, w: SheetPoint) -> Result<ComplexValue> {
    Ok(macdonald_parts(nu, w)?.value())
}

/// `H^(1)_ν(ζ)` through `K_ν(z) = ½πi·e^{iνπ/2}·H^(1)_ν(z·e^{iπ/2})`.
pub fn hankel_h1(nu: ComplexValue, w: SheetPoint) -> Result<ComplexValue> {
    let k = macdonald_k(nu, w.rotated(-FRAC_PI_2))?;
    let factor = ComplexValue::new(0.0, FRAC_PI_2) * (ComplexValue::new(0.0, FRAC_PI_2) * nu).exp();
    Ok(k / factor)
}

/// `E_ν` with its `w`-derivative and the series it was built from.
#[derive(Debug, Clone, Copy)]
pub struct Residual {
    pub value: ComplexValue,
    pub derivative: ComplexValue,
    pub minus: SeriesResult,
    pub plus: SeriesResult,
    /// `|(z/2)^{2ν} Γ(1−ν)/Γ(1+ν) · Σ_+|`, the magnitude of the subtracted term.
    pub second_term: f64,
}

impl Residual {
    pub fn truncation_ok(&self) -> bool {
        self.minus.truncation_ok && self.plus.truncation_ok
    }

    /// Size of the two terms whose difference is `E_ν`.
    pub fn scale(&self) -> f64 {
        self.minus.value.norm().max(self.second_term)
    }

    /// False when `E_ν` and its derivative are both lost to cancellation,
    /// as happens deep in the right half-plane where `K_ν` is exponentially
    /// small against the series.
    pub fn well_conditioned(&self) -> bool {
        self.derivative.norm() >= CONDITIONING_FLOOR * self.scale()
    }

    pub fn terms_used(&self) -> usize {
        self.minus.terms_used.max(self.plus.terms_used)
    }
}

/// `E_ν(z) = Σ_− − (z/2)^{2ν} Γ(1−ν)/Γ(1+ν) Σ_+`, whose zeros are those of `K_ν`.
///
/// The derivative is taken with respect to `w = log z`: each series term
/// picks up `2k` and the power `(z/2)^{2ν}` picks up `2ν`.
pub fn zero_residual(nu: ComplexValue, w: SheetPoint) -> Result<Residual> {
    check_order(nu)?;
    let minus = kummer_series(SeriesSign::Minus, nu, w)?;
    let plus = kummer_series(SeriesSign::Plus, nu, w)?;
    let power_ratio = (2.0 * nu * (w.log() - LN_2) - log_gamma_ratio(nu)?).exp();
    let second = power_ratio * plus.value;
    let value = minus.value - second;
    let derivative = minus.derivative - power_ratio * (2.0 * nu * plus.value + plus.derivative);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Domain(format!(
            "residual overflow at nu = {nu}, w = {w}"
        )));
    }
    Ok(Residual {
        value,
        derivative,
        minus,
        plus,
        second_term: second.norm(),
    })
}
