use std::f64::consts::PI;

use crate::{Error, Result, SheetPoint};

use super::newton::{refine_zero, NewtonOptions, ZeroRecord};
use super::path::{trace_trajectory, DetourSign, NuPath, JUMP_GUARD};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalOptions {
    /// Nominal continuation step in `|ν|` while scanning the bracket.
    pub scan_step: f64,
    /// Absolute tolerance on the returned modulus.
    pub tol: f64,
    pub detour_sign: DetourSign,
}

impl Default for CriticalOptions {
    fn default() -> Self {
        Self {
            scan_step: 0.02,
            tol: 1e-6,
            detour_sign: DetourSign::Minus,
        }
    }
}

pub fn find_critical_modulus(arg_nu: f64, label: u32, bracket: (f64, f64)) -> Result<f64> {
    find_critical_modulus_with(arg_nu, label, bracket, &CriticalOptions::default())
}

/// Modulus `|ν|` on the ray `arg ν = arg_nu` at which zero `label` crosses
/// `arg z = −π` and leaves the principal sheet.
///
/// The zero is followed from the top of the bracket downwards; the first
/// crossing found is then bisected, each midpoint refined from the
/// interpolated neighbours.
pub fn find_critical_modulus_with(
    arg_nu: f64,
    label: u32,
    bracket: (f64, f64),
    opts: &CriticalOptions,
) -> Result<f64> {
    let (lo, hi) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    if !(lo > 0.0) || lo == hi {
        return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    let steps = (((hi - lo) / opts.scan_step).ceil() as usize).clamp(20, 5000);
    let path = NuPath::fixed_arg(arg_nu, hi, lo, steps).with_detour_sign(opts.detour_sign);
    let trajectory = match trace_trajectory(&path, label) {
        Ok(t) => t,
        Err(Error::ContinuationStall { partial, .. }) => *partial,
        Err(e) => return Err(e),
    };

    let above = |r: &ZeroRecord| r.w.phi > -PI;
    let crossing = trajectory
        .records
        .windows(2)
        .position(|pair| above(&pair[0]) && !above(&pair[1]))
        .ok_or(Error::NoCrossing { lo, hi })?;

    let mut upper = trajectory.records[crossing];
    let mut lower = trajectory.records[crossing + 1];
    let newton = NewtonOptions::default();
    while (upper.nu.norm() - lower.nu.norm()).abs() > opts.tol {
        let (m_up, m_lo) = (upper.nu.norm(), lower.nu.norm());
        let mid = 0.5 * (m_up + m_lo);
        let nu = path.at((hi - mid) / (hi - lo), label);
        let frac = (m_up - nu.norm()) / (m_up - m_lo);
        let seed = SheetPoint::from_log(upper.w.log() + (lower.w.log() - upper.w.log()) * frac);
        let rec = refine_zero(nu, seed, &newton)?.with_label(label);
        if !rec.converged || rec.w.distance(upper.w).min(rec.w.distance(lower.w)) > JUMP_GUARD {
            return Err(Error::NoConvergence(seed.z()));
        }
        if above(&rec) {
            upper = rec;
        } else {
            lower = rec;
        }
        if nu.norm() == m_up || nu.norm() == m_lo {
            // Integer avoidance pinned the midpoint; cannot refine further.
            break;
        }
    }
    Ok(0.5 * (upper.nu.norm() + lower.nu.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn real_order_first_zero() {
        let m = find_critical_modulus(0.0, 1, (1.0, 2.0)).unwrap();
        assert!((m - 1.5).abs() < 1e-3, "{m}");
    }

    #[test]
    fn pure_imaginary_never_crosses() {
        let e = find_critical_modulus(FRAC_PI_2, 1, (2.0, 20.0));
        assert!(matches!(e, Err(Error::NoCrossing { .. })), "{e:?}");
    }
}
