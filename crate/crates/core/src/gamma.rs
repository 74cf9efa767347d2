//! Complex log-gamma and the gamma ratio `Γ(1+ν)/Γ(1−ν)`.

use std::f64::consts::PI;

use crate::{ComplexValue, Error, Result};

const POLE_TOL: f64 = 1e-12;

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Principal branch of `log Γ(ζ)`: analytic off the negative real axis and
/// real for real positive `ζ`.
pub fn log_gamma(zeta: ComplexValue) -> Result<ComplexValue> {
    if !zeta.re.is_finite() || !zeta.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {zeta}")));
    }
    if zeta.re <= 0.5 {
        let nearest = zeta.re.round();
        if nearest <= 0.0 && (zeta - nearest).norm() < POLE_TOL {
            return Err(Error::GammaPole(zeta));
        }
        return Ok(reflected(zeta));
    }
    Ok(lanczos(zeta))
}

fn lanczos(zeta: ComplexValue) -> ComplexValue {
    let x = zeta - 1.0;
    let mut series = ComplexValue::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    HALF_LN_2PI + (x + 0.5) * t.ln() - t + series.ln()
}

// log Γ(ζ) = log π − log sin(πζ) − log Γ(1−ζ), plus the multiple of 2πi that
// keeps the result on the principal branch.
fn reflected(zeta: ComplexValue) -> ComplexValue {
    let sin_pi = (PI * zeta).sin();
    let turns = (0.5 * zeta.re + 0.25).floor();
    let branch = ComplexValue::new(0.0, 2.0 * PI * turns * 1f64.copysign(zeta.im));
    LN_PI - sin_pi.ln() - lanczos(1.0 - zeta) + branch
}

/// `Γ(1+ν)/Γ(1−ν)`.
pub fn gamma_ratio(nu: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gamma_ratio(nu)?.exp())
}

/// `log Γ(1+ν) − log Γ(1−ν)` on the principal branches of both terms.
pub fn log_gamma_ratio(nu: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gamma(1.0 + nu)? - log_gamma(1.0 - nu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EULER_GAMMA;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn trivial_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert!(half.im.abs() < 1e-15);
    }

    // Reference values from a 30-digit multiprecision evaluation.
    #[test]
    fn matches_multiprecision_reference() {
        let cases = [
            (
                (1.0, 1.0),
                (-0.650_923_199_301_856_34, -0.301_640_320_467_533_2),
            ),
            (
                (-3.7, 2.2),
                (-7.259_769_349_970_579_7, -9.940_188_451_078_55),
            ),
            (
                (-10.3, 30.0),
                (-83.162_171_084_810_27, 53.168_504_245_165_738),
            ),
            (
                (-20.5, -18.7),
                (-93.288_470_220_026_081, 7.002_694_282_941_806_1),
            ),
            (
                (0.3, -40.0),
                (-62.650_686_053_968_133, -107.241_560_579_886_68),
            ),
            (
                (25.0, 30.0),
                (39.427_996_866_863_048, 101.408_028_253_933_79),
            ),
            (
                (-0.5, 1e-3),
                (1.265_507_656_091_603_8, -3.141_556_163_477_681_9),
            ),
        ];
        for ((zr, zi), (lr, li)) in cases {
            let got = log_gamma(c(zr, zi)).unwrap();
            let want = c(lr, li);
            // Relative accuracy of exp(log Γ) is the absolute error of log Γ.
            assert!((got - want).norm() < 1e-12, "{zr}+{zi}i: {got} vs {want}");
        }
    }

    #[test]
    fn recurrence_holds_off_axis() {
        for &(re, im) in &[(-7.3, 0.4), (0.2, -5.0), (12.0, 3.0), (-30.1, -25.0)] {
            let z = c(re, im);
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            assert!((lhs - rhs).norm() < 1e-11, "{z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn negative_real_axis_modulus() {
        // |Γ(-2.5)| = 8√π/15
        let v = log_gamma(c(-2.5, 0.0)).unwrap();
        let want = (8.0 * PI.sqrt() / 15.0).ln();
        assert!((v.re - want).abs() < 1e-13);
    }

    #[test]
    fn poles_are_rejected() {
        for k in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(c(k, 0.0)), Err(Error::GammaPole(_))));
            assert!(matches!(
                log_gamma(c(k + 1e-13, 0.0)),
                Err(Error::GammaPole(_))
            ));
        }
        assert!(log_gamma(c(-1.0 + 1e-6, 0.0)).is_ok());
    }

    #[test]
    fn gamma_ratio_examples() {
        assert!((gamma_ratio(c(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);

        let nu = 0.01;
        let truncated = 1.0 - 2.0 * EULER_GAMMA * nu + 2.0 * EULER_GAMMA.powi(2) * nu * nu;
        let r = gamma_ratio(c(nu, 0.0)).unwrap();
        assert!((r.re - truncated).abs() < 1e-5);
        assert!((r.re - 0.988_521_274_390_517_42).abs() < 1e-13);

        let r = gamma_ratio(c(0.0, 0.3)).unwrap();
        assert!((r.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_ratio_poles() {
        assert!(gamma_ratio(c(1.0, 0.0)).is_err());
        assert!(gamma_ratio(c(-3.0, 0.0)).is_err());
    }
}
