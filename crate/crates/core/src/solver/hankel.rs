use std::f64::consts::FRAC_PI_2;

use crate::macdonald::{hankel_h1, macdonald_parts, zero_residual};
use crate::{ComplexValue, Result};

use super::newton::ZeroRecord;

/// Zero of `H^(1)_ν` corresponding to a zero of `K_ν`: the same point rotated
/// by `+π/2`.
///
/// The residual is recomputed from the rotated point, and `converged` also
/// requires `|H^(1)_ν|` to be negligible against the size of the series
/// terms it is assembled from.
pub fn hankel_zeros_from_macdonald(record: &ZeroRecord) -> Result<ZeroRecord> {
    let w = record.w.rotated(FRAC_PI_2);
    let back = w.rotated(-FRAC_PI_2);
    let residual = zero_residual(record.nu, back)?;
    let h = hankel_h1(record.nu, w)?;
    let parts = macdonald_parts(record.nu, back)?;
    let factor = (ComplexValue::new(0.0, FRAC_PI_2)
        * (ComplexValue::new(0.0, FRAC_PI_2) * record.nu).exp())
    .norm();
    let h_small = h.norm() <= 1e-8 * parts.term_scale() / factor;
    Ok(ZeroRecord::new(
        record.label,
        record.nu,
        w,
        residual.value.norm(),
        record.iterations,
        record.converged && h_small,
    ))
}
