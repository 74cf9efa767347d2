use crate::macdonald::{zero_residual, Residual};
use crate::{ComplexValue, Error, Result, SheetPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOptions {
    pub max_iter: u32,
    /// Convergence threshold on `|E_ν|`.
    pub tol: f64,
    /// Cap on `|Δw|` per iteration. Far from a zero the raw Newton step can
    /// throw the iterate onto an unrelated zero.
    pub max_step: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self {
            max_iter: 30,
            tol: 1e-10,
            max_step: 0.05,
        }
    }
}

/// One located zero of `K_ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    /// Zero label `n` (equivalently `s`); `0` when the zero was refined
    /// without one.
    pub label: u32,
    pub nu: ComplexValue,
    pub w: SheetPoint,
    pub z: ComplexValue,
    pub residual_abs: f64,
    pub iterations: u32,
    pub converged: bool,
    pub sheet_index: i64,
}

impl ZeroRecord {
    pub fn new(
        label: u32,
        nu: ComplexValue,
        w: SheetPoint,
        residual_abs: f64,
        iterations: u32,
        converged: bool,
    ) -> Self {
        Self {
            label,
            nu,
            w,
            z: w.z(),
            residual_abs,
            iterations,
            converged,
            sheet_index: w.sheet_index(),
        }
    }

    pub fn with_label(mut self, label: u32) -> Self {
        self.label = label;
        self
    }
}

/// An iterate and the residual evaluated there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonStep {
    pub w: SheetPoint,
    pub residual: ComplexValue,
}

/// Newton iteration `w ← w − E/(dE/dw)` on [`zero_residual`].
pub fn refine_zero(nu: ComplexValue, seed: SheetPoint, opts: &NewtonOptions) -> Result<ZeroRecord> {
    refine_zero_with(zero_residual, nu, seed, opts).map(|(rec, _)| rec)
}

/// Like [`refine_zero`] but also returns every iterate with its residual.
pub fn refine_zero_traced(
    nu: ComplexValue,
    seed: SheetPoint,
    opts: &NewtonOptions,
) -> Result<(ZeroRecord, Vec<NewtonStep>)> {
    refine_zero_with(zero_residual, nu, seed, opts)
}

/// Newton driver over an arbitrary residual function.
///
/// A point counts as converged when `|E| < tol` and the residual there is
/// [well conditioned](Residual::well_conditioned).
pub fn refine_zero_with<F>(
    f: F,
    nu: ComplexValue,
    seed: SheetPoint,
    opts: &NewtonOptions,
) -> Result<(ZeroRecord, Vec<NewtonStep>)>
where
    F: Fn(ComplexValue, SheetPoint) -> Result<Residual>,
{
    if !seed.is_finite() {
        return Err(Error::Domain(format!("non-finite seed {seed}")));
    }
    let mut w = seed.log();
    let mut history = Vec::new();
    let mut iterations = 0;
    loop {
        let point = SheetPoint::from_log(w);
        let residual = f(nu, point)?;
        let (value, derivative) = (residual.value, residual.derivative);
        history.push(NewtonStep {
            w: point,
            residual: value,
        });
        let residual_abs = value.norm();
        if residual_abs < opts.tol && residual.well_conditioned() {
            return Ok((
                ZeroRecord::new(0, nu, point, residual_abs, iterations, true),
                history,
            ));
        }
        let mut step = -value / derivative;
        if iterations >= opts.max_iter || !step.re.is_finite() || !step.im.is_finite() {
            return Ok((
                ZeroRecord::new(0, nu, point, residual_abs, iterations, false),
                history,
            ));
        }
        let len = step.norm();
        if len > opts.max_step {
            step *= opts.max_step / len;
        }
        w += step;
        iterations += 1;
    }
}
