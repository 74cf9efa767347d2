//! Closed-form approximations to the `z`-zeros of `K_ν`.
//!
//! * small `|ν|`: [`small_nu_zero_crude`], [`small_nu_zero_refined`]
//! * large `|ν|`, transition region `z ≈ −iν`: [`theta_s`], [`large_nu_zero`]
//! * `|z| ≪ |ν|`: [`log_zero_estimate`]
//! * `ν`-zeros of `H^(1)_ν(z)` for large `|z|`: [`hankel_nu_zero`]
//!
//! Every estimate returns its `phi` unfolded so it can seed Newton on the
//! right sheet.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::airy::{airy_zero, MAX_ZERO_INDEX};
use crate::gamma::log_gamma_ratio;
use crate::{ComplexValue, Error, Result, SheetPoint, EULER_GAMMA};

/// Smallest `|ν|` for the transition-region formulas.
pub const LARGE_NU_MIN: f64 = 5.0;
/// The logarithmic estimate is accepted only when `|z| < |ν| / LOG_REGIME_FACTOR`.
pub const LOG_REGIME_FACTOR: f64 = 3.0;

const ARG_TOL: f64 = 1e-12;

fn cis(angle: f64) -> ComplexValue {
    ComplexValue::from_polar(1.0, angle)
}

/// `2^{−1/3} e^{−i2π/3}`
fn rot_minus() -> ComplexValue {
    2f64.powf(-1.0 / 3.0) * cis(-2.0 * PI / 3.0)
}

/// `2^{1/3} e^{i2π/3}`
fn rot_plus() -> ComplexValue {
    2f64.powf(1.0 / 3.0) * cis(2.0 * PI / 3.0)
}

fn check_first_quadrant(nu: ComplexValue) -> Result<()> {
    let arg = nu.arg();
    if !(-ARG_TOL..=FRAC_PI_2 + ARG_TOL).contains(&arg) {
        return Err(Error::Domain(format!(
            "order {nu} outside the first quadrant; canonicalize it first"
        )));
    }
    Ok(())
}

fn check_label(label: u32) -> Result<()> {
    if label == 0 {
        return Err(Error::Domain("zero labels start at 1".into()));
    }
    Ok(())
}

fn check_large(nu: ComplexValue, s: usize) -> Result<()> {
    if nu.norm() < LARGE_NU_MIN {
        return Err(Error::Range {
            arg: format!("|nu| = {}", nu.norm()),
            range: "|nu| >= 5",
        });
    }
    if s == 0 || s > MAX_ZERO_INDEX {
        return Err(Error::Range {
            arg: format!("s = {s}"),
            range: "1 <= s <= 10",
        });
    }
    Ok(())
}

fn check_small(nu: ComplexValue, n: u32) -> Result<()> {
    check_label(n)?;
    let m = nu.norm();
    if m == 0.0 {
        return Err(Error::Domain("small-order estimate needs nu != 0".into()));
    }
    if m >= 1.0 {
        return Err(Error::Range {
            arg: format!("|nu| = {m}"),
            range: "0 < |nu| < 1",
        });
    }
    check_first_quadrant(nu)
}

/// Leading small-`|ν|` estimate: `log|z_n| ≈ −nπ Im ν/|ν|² + log 2 − γ`,
/// `arg z_n ≈ −nπ Re ν/|ν|²`.
pub fn small_nu_zero_crude(nu: ComplexValue, n: u32) -> Result<SheetPoint> {
    check_small(nu, n)?;
    let n_pi = n as f64 * PI;
    let m2 = nu.norm_sqr();
    Ok(SheetPoint::new(
        -n_pi * nu.im / m2 + LN_2 - EULER_GAMMA,
        -n_pi * nu.re / m2,
    ))
}

/// `log z_n ≈ (−nπi + ½ log(Γ(1+ν)/Γ(1−ν)))/ν + log 2`, dropping the `z²` term.
pub fn small_nu_zero_refined(nu: ComplexValue, n: u32) -> Result<SheetPoint> {
    check_small(nu, n)?;
    let w = (ComplexValue::new(0.0, -(n as f64) * PI) + 0.5 * log_gamma_ratio(nu)?) / nu + LN_2;
    Ok(SheetPoint::from_log(w))
}

/// Coefficients `α_{s,1..4}` of `ε_s(ν) = Σ_j α_{s,j} ν^{−2j/3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionCoefficients {
    pub s: usize,
    pub airy_zero: f64,
    pub alpha: [ComplexValue; 4],
}

impl TransitionCoefficients {
    pub fn new(s: usize) -> Result<Self> {
        let a = airy_zero(s)?;
        Ok(Self::from_airy_zero(s, a))
    }

    pub fn from_airy_zero(s: usize, a: f64) -> Self {
        let a2 = a * a;
        let a3 = a2 * a;
        let alpha = [
            -0.3 * rot_minus() * a2,
            -(a3 + 10.0) / 700.0 * rot_plus(),
            ComplexValue::new(a * (479.0 * a3 - 40.0) / 126_000.0, 0.0),
            a2 * (20_231.0 * a3 + 55_100.0) / 16_170_000.0 * rot_minus(),
        ];
        Self {
            s,
            airy_zero: a,
            alpha,
        }
    }

    /// `ε_s(ν)`, with `ν^{−2j/3}` on the principal branch.
    pub fn epsilon(&self, nu: ComplexValue) -> ComplexValue {
        let log_nu = nu.ln();
        self.alpha
            .iter()
            .enumerate()
            .map(|(i, &alpha)| alpha * (-(2.0 * (i + 1) as f64 / 3.0) * log_nu).exp())
            .sum()
    }

    /// `θ_s = −2^{−1/3} e^{−i2π/3} (a_s + ε_s(ν))`.
    pub fn theta(&self, nu: ComplexValue) -> ComplexValue {
        -rot_minus() * (self.airy_zero + self.epsilon(nu))
    }
}

pub fn theta_s(nu: ComplexValue, s: usize) -> Result<ComplexValue> {
    check_large(nu, s)?;
    Ok(TransitionCoefficients::new(s)?.theta(nu))
}

/// `z_s ≈ e^{−iπ/2}(ν + θ_s ν^{1/3})` for `|ν| ≫ 1`.
pub fn large_nu_zero(nu: ComplexValue, s: usize) -> Result<SheetPoint> {
    check_large(nu, s)?;
    check_first_quadrant(nu)?;
    let hankel_zero = nu + theta_s(nu, s)? * nu.cbrt();
    Ok(SheetPoint::from_z(hankel_zero).rotated(-FRAC_PI_2))
}

/// Six-term reversion giving the `ν`-zeros of `H^(1)_ν(z)` for large `|z|`.
pub fn hankel_nu_zero(w: SheetPoint, s: usize) -> Result<ComplexValue> {
    if w.modulus() < LARGE_NU_MIN {
        return Err(Error::Range {
            arg: format!("|z| = {}", w.modulus()),
            range: "|z| >= 5",
        });
    }
    let a = airy_zero(s).map_err(|_| Error::Range {
        arg: format!("s = {s}"),
        range: "1 <= s <= 10",
    })?;
    let log_z = w.log();
    let pow = |p: f64| (p * log_z).exp();
    let a2 = a * a;
    let a3 = a2 * a;
    Ok(
        pow(1.0) + rot_minus() * a * pow(1.0 / 3.0) + rot_plus() * a2 / 60.0 * pow(-1.0 / 3.0)
            - (a3 + 10.0) / 700.0 * pow(-1.0)
            + rot_minus() * a * (281.0 * a3 + 10_440.0) / 1_134_000.0 * pow(-5.0 / 3.0)
            - rot_plus() * a2 * (73_769.0 * a3 + 6_624_900.0) / 2_619_540_000.0 * pow(-7.0 / 3.0),
    )
}

/// `z_n ≈ e^{−iπ/2}·2ν·exp(−1 − i(n − ¼)π/ν)`, valid while `|z_n| ≪ |ν|`.
pub fn log_zero_estimate(nu: ComplexValue, n: u32) -> Result<SheetPoint> {
    check_label(n)?;
    check_first_quadrant(nu)?;
    if nu.im <= 0.0 || nu.arg() <= 0.0 {
        return Err(Error::Regime(
            "logarithmic estimate needs arg nu > 0".into(),
        ));
    }
    let w = ComplexValue::new(LN_2 - 1.0, -FRAC_PI_2) + nu.ln()
        - ComplexValue::new(0.0, (n as f64 - 0.25) * PI) / nu;
    let estimate = SheetPoint::from_log(w);
    let bound = nu.norm() / LOG_REGIME_FACTOR;
    if estimate.modulus() >= bound {
        return Err(Error::Regime(format!(
            "|z_{n}| ~ {:.4} is not below |nu|/3 = {bound:.4}",
            estimate.modulus()
        )));
    }
    Ok(estimate)
}
