use crate::airy::MAX_ZERO_INDEX;
use crate::asymptotics::{large_nu_zero, log_zero_estimate, small_nu_zero_refined, LARGE_NU_MIN};
use crate::{ComplexValue, Error, Result, SheetPoint};

use super::path::{trace_trajectory, NuPath};

/// Nominal continuation step in `|ν|` used when seeding `1 ≤ |ν| < 5`.
const SEED_CONTINUATION_STEP: f64 = 0.05;

/// Chooses an asymptotic estimate for zero `label` of `K_ν`.
///
/// `ν` must already be in the closed first quadrant.
pub fn initial_guess(nu: ComplexValue, label: u32) -> Result<SheetPoint> {
    if label == 0 {
        return Err(Error::Domain("zero labels start at 1".into()));
    }
    let modulus = nu.norm();
    if modulus < 1.0 {
        return small_nu_zero_refined(nu, label);
    }
    if modulus >= LARGE_NU_MIN {
        let log_estimate = log_zero_estimate(nu, label);
        if let Ok(seed) = log_estimate {
            return Ok(seed);
        }
        if label as usize <= MAX_ZERO_INDEX {
            return large_nu_zero(nu, label as usize);
        }
        return Err(Error::NoRegime {
            nu,
            label,
            detail: format!(
                "logarithmic estimate rejected ({}), and label > 10 has no transition-region estimate",
                log_estimate.unwrap_err()
            ),
        });
    }

    // 1 ≤ |ν| < 5: follow the zero in from |ν| = 5 along the same ray.
    let arg = nu.arg();
    let steps = ((LARGE_NU_MIN - modulus) / SEED_CONTINUATION_STEP)
        .ceil()
        .max(1.0) as usize;
    let path = NuPath::fixed_arg(arg, LARGE_NU_MIN, modulus, steps);
    let trajectory = trace_trajectory(&path, label).map_err(|e| Error::NoRegime {
        nu,
        label,
        detail: format!("continuation from |nu| = 5 failed: {e}"),
    })?;
    let last = trajectory
        .records
        .last()
        .expect("a successful trajectory has records");
    Ok(last.w)
}
