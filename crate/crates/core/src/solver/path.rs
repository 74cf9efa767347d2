use std::f64::consts::PI;

use crate::{ComplexValue, Error, Result, SheetPoint};

use super::newton::{refine_zero, NewtonOptions, ZeroRecord};
use super::seed::initial_guess;

/// Largest `|Δw|` accepted between consecutive records of a trajectory.
pub const JUMP_GUARD: f64 = 0.5;
/// Smallest step, as a fraction of the nominal one, before continuation stalls.
pub const MIN_STEP_FRACTION: f64 = 1.0 / 1024.0;

/// Orders this close to a real integer are moved off it; the ascending-series
/// residual cancels badly there.
const INTEGER_AVOIDANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    /// `arg ν` fixed, `|ν|` interpolated linearly.
    FixedArg,
    /// `|ν|` fixed, `arg ν` interpolated linearly.
    FixedModulus,
    /// Straight segment in the `ν`-plane.
    Segment,
}

/// Side of the real axis used to step around the branch point of `z_s(ν)`
/// at `ν = s − ½`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetourSign {
    Plus,
    Minus,
}

impl DetourSign {
    pub fn sign(self) -> f64 {
        match self {
            DetourSign::Plus => 1.0,
            DetourSign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuPath {
    pub mode: PathMode,
    pub start: ComplexValue,
    pub end: ComplexValue,
    pub steps: usize,
    pub detour_sign: DetourSign,
    /// Radius of the half-circle taken around `ν = s − ½` on real paths.
    pub detour_epsilon: f64,
}

impl NuPath {
    fn new(mode: PathMode, start: ComplexValue, end: ComplexValue, steps: usize) -> Self {
        Self {
            mode,
            start,
            end,
            steps,
            detour_sign: DetourSign::Minus,
            detour_epsilon: 1e-3 * start.norm().max(end.norm()),
        }
    }

    pub fn fixed_arg(arg: f64, from_modulus: f64, to_modulus: f64, steps: usize) -> Self {
        Self::new(
            PathMode::FixedArg,
            ComplexValue::from_polar(from_modulus, arg),
            ComplexValue::from_polar(to_modulus, arg),
            steps,
        )
    }

    pub fn fixed_modulus(modulus: f64, from_arg: f64, to_arg: f64, steps: usize) -> Self {
        Self::new(
            PathMode::FixedModulus,
            ComplexValue::from_polar(modulus, from_arg),
            ComplexValue::from_polar(modulus, to_arg),
            steps,
        )
    }

    pub fn segment(start: ComplexValue, end: ComplexValue, steps: usize) -> Self {
        Self::new(PathMode::Segment, start, end, steps)
    }

    pub fn with_detour(mut self, sign: DetourSign, epsilon: f64) -> Self {
        self.detour_sign = sign;
        self.detour_epsilon = epsilon;
        self
    }

    pub fn with_detour_sign(mut self, sign: DetourSign) -> Self {
        self.detour_sign = sign;
        self
    }

    pub fn reversed(&self) -> Self {
        Self {
            start: self.end,
            end: self.start,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::Domain("path needs at least one step".into()));
        }
        if self.start == self.end {
            return Err(Error::Domain("path start and end coincide".into()));
        }
        if !(self.detour_epsilon > 0.0) {
            return Err(Error::Domain("detour_epsilon must be positive".into()));
        }
        if self.mode == PathMode::FixedModulus
            && (self.start.norm() - self.end.norm()).abs() > 1e-12 * self.start.norm()
        {
            return Err(Error::Domain(
                "fixed-modulus path endpoints differ in modulus".into(),
            ));
        }
        Ok(())
    }

    /// Undeformed path point at parameter `t ∈ [0, 1]`.
    pub fn base(&self, t: f64) -> ComplexValue {
        match self.mode {
            PathMode::Segment => self.start + (self.end - self.start) * t,
            PathMode::FixedArg => {
                let m = self.start.norm() + (self.end.norm() - self.start.norm()) * t;
                ComplexValue::from_polar(m, self.start.arg())
            }
            PathMode::FixedModulus => {
                let a0 = self.start.arg();
                let mut a1 = self.end.arg();
                if a1 - a0 > PI {
                    a1 -= 2.0 * PI;
                } else if a0 - a1 > PI {
                    a1 += 2.0 * PI;
                }
                ComplexValue::from_polar(self.start.norm(), a0 + (a1 - a0) * t)
            }
        }
    }

    /// Order actually evaluated at `t` when following zero `label`: the base
    /// point, bent around `ν = label − ½` when on the real axis, and pushed
    /// off real integers.
    pub fn at(&self, t: f64, label: u32) -> ComplexValue {
        let mut nu = self.base(t);
        let on_real_axis = nu.im.abs() <= 1e-14 * nu.norm().max(1.0);
        if on_real_axis && label > 0 {
            let d = nu.re - (label as f64 - 0.5);
            let r = self.detour_epsilon;
            if d.abs() < r {
                nu = ComplexValue::new(nu.re, self.detour_sign.sign() * (r * r - d * d).sqrt());
            }
        }
        let nearest = nu.re.round();
        let offset = nu - ComplexValue::new(nearest, 0.0);
        if offset.norm() < INTEGER_AVOIDANCE {
            let side = if offset.re >= 0.0 { 1.0 } else { -1.0 };
            nu = ComplexValue::new(nearest + side * INTEGER_AVOIDANCE, nu.im);
        }
        nu
    }
}

/// The zero with a fixed label followed along a [`NuPath`].
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub path: NuPath,
    pub label: u32,
    /// Path parameter of each record.
    pub params: Vec<f64>,
    pub records: Vec<ZeroRecord>,
    /// First order at which the zero is found off the principal sheet after
    /// having been on it.
    pub left_principal_at: Option<ComplexValue>,
}

impl Trajectory {
    fn new(path: NuPath, label: u32) -> Self {
        Self {
            path,
            label,
            params: Vec::new(),
            records: Vec::new(),
            left_principal_at: None,
        }
    }

    fn push(&mut self, t: f64, rec: ZeroRecord) {
        if self.left_principal_at.is_none() {
            if let Some(prev) = self.records.last() {
                if prev.sheet_index == 0 && rec.sheet_index != 0 {
                    self.left_principal_at = Some(rec.nu);
                }
            }
        }
        self.params.push(t);
        self.records.push(rec);
    }

    /// Linear extrapolation of the last two refined points to parameter `t`.
    fn extrapolate(&self, t: f64) -> SheetPoint {
        let n = self.records.len();
        let last = self.records[n - 1].w;
        if n < 2 {
            return last;
        }
        let prev = self.records[n - 2].w;
        let (t0, t1) = (self.params[n - 2], self.params[n - 1]);
        if t1 == t0 {
            return last;
        }
        let slope = (last.log() - prev.log()) / (t1 - t0);
        SheetPoint::from_log(last.log() + slope * (t - t1))
    }

    pub fn last(&self) -> Option<&ZeroRecord> {
        self.records.last()
    }
}

pub fn trace_trajectory(path: &NuPath, label: u32) -> Result<Trajectory> {
    trace_trajectory_with(path, label, None, &NewtonOptions::default())
}

/// Continuation along `path`. The first point is seeded with `start_seed`, or
/// with [`initial_guess`] when none is given; later points are seeded by
/// extrapolation. Rejected steps are halved down to
/// [`MIN_STEP_FRACTION`] of the nominal step.
pub fn trace_trajectory_with(
    path: &NuPath,
    label: u32,
    start_seed: Option<SheetPoint>,
    opts: &NewtonOptions,
) -> Result<Trajectory> {
    path.validate()?;
    let mut traj = Trajectory::new(*path, label);

    let nu0 = path.at(0.0, label);
    let seed = match start_seed {
        Some(seed) => seed,
        None => initial_guess(nu0, label)?,
    };
    let first = refine_zero(nu0, seed, opts)?.with_label(label);
    if !first.converged {
        return Err(Error::NoConvergence(seed.z()));
    }
    traj.push(0.0, first);

    let nominal = 1.0 / path.steps as f64;
    let floor = nominal * MIN_STEP_FRACTION;
    let mut t = 0.0;
    let mut dt = nominal;
    for i in 1..=path.steps {
        let target = if i == path.steps {
            1.0
        } else {
            i as f64 * nominal
        };
        while target - t > 1e-9 * nominal {
            let t_next = if target - (t + dt) < 1e-9 * nominal {
                target
            } else {
                t + dt
            };
            let nu = path.at(t_next, label);
            let seed = traj.extrapolate(t_next);
            let prev = traj.last().expect("non-empty").w;
            let accepted = match refine_zero(nu, seed, opts) {
                Ok(rec) if rec.converged && rec.w.distance(prev) <= JUMP_GUARD => Some(rec),
                _ => None,
            };
            match accepted {
                Some(rec) => {
                    traj.push(t_next, rec.with_label(label));
                    t = t_next;
                    dt = (2.0 * dt).min(nominal);
                }
                None => {
                    dt *= 0.5;
                    if dt < floor {
                        return Err(Error::ContinuationStall {
                            nu,
                            partial: Box::new(traj),
                        });
                    }
                }
            }
        }
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn base_points() {
        let p = NuPath::fixed_arg(0.3, 10.0, 2.0, 4);
        assert!((p.base(0.5).norm() - 6.0).abs() < 1e-14);
        assert!((p.base(0.5).arg() - 0.3).abs() < 1e-14);
        let q = NuPath::fixed_modulus(5.0, 0.0, FRAC_PI_2, 4);
        assert!((q.base(0.5).arg() - FRAC_PI_2 / 2.0).abs() < 1e-14);
        assert!((q.base(0.5).norm() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn detour_only_near_own_branch_point() {
        let p = NuPath::segment(ComplexValue::new(3.0, 0.0), ComplexValue::new(1.0, 0.0), 10)
            .with_detour(DetourSign::Plus, 0.01);
        let nu = p.at(0.75, 2);
        assert!((nu - ComplexValue::new(1.5, 0.01)).norm() < 1e-12);
        assert_eq!(p.at(0.75, 1).im, 0.0);
        let m = p.with_detour_sign(DetourSign::Minus);
        assert!(m.at(0.75, 2).im < 0.0);
    }

    #[test]
    fn integers_are_avoided() {
        let p = NuPath::segment(ComplexValue::new(3.0, 0.0), ComplexValue::new(1.0, 0.0), 2);
        let nu = p.at(0.5, 1);
        assert!((nu.re - 2.0).abs() >= 1e-4 - 1e-15);
        assert!(crate::macdonald::check_order(p.at(0.0, 1)).is_ok());
    }

    #[test]
    fn validation() {
        assert!(
            NuPath::segment(ComplexValue::new(1.0, 1.0), ComplexValue::new(1.0, 1.0), 3)
                .validate()
                .is_err()
        );
        assert!(NuPath::fixed_arg(0.2, 5.0, 4.0, 0).validate().is_err());
    }

    #[test]
    fn pure_imaginary_stays_on_real_axis() {
        let path = NuPath::fixed_arg(FRAC_PI_2, 10.0, 2.0, 40);
        let traj = trace_trajectory(&path, 1).unwrap();
        assert!(traj.records.len() >= 41);
        for r in &traj.records {
            assert!(r.converged);
            assert!(r.z.im.abs() < 1e-9 && r.z.re > 0.0, "{}", r.z);
        }
        assert!(traj.left_principal_at.is_none());
    }

    #[test]
    fn stall_returns_partial_results() {
        let path = NuPath::fixed_arg(FRAC_PI_2, 10.0, 2.0, 40);
        let opts = NewtonOptions {
            max_iter: 0,
            ..Default::default()
        };
        let seed = crate::asymptotics::large_nu_zero(ComplexValue::new(0.0, 10.0), 1).unwrap();
        let start = refine_zero(
            ComplexValue::new(0.0, 10.0),
            seed,
            &NewtonOptions::default(),
        )
        .unwrap();
        match trace_trajectory_with(&path, 1, Some(start.w), &opts) {
            Err(Error::ContinuationStall { partial, .. }) => assert_eq!(partial.records.len(), 1),
            other => panic!("expected stall, got {other:?}"),
        }
    }
}
