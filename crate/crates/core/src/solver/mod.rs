//! Newton refinement in `w = log z`, seeding, continuation in `ν`, and the
//! searches built on top of them.

mod critical;
mod hankel;
mod newton;
mod path;
mod scan;
mod seed;
pub mod table1;

pub use critical::{find_critical_modulus, find_critical_modulus_with, CriticalOptions};
pub use hankel::hankel_zeros_from_macdonald;
pub use newton::{
    refine_zero, refine_zero_traced, refine_zero_with, NewtonOptions, NewtonStep, ZeroRecord,
};
pub use path::{
    trace_trajectory, trace_trajectory_with, DetourSign, NuPath, PathMode, Trajectory, JUMP_GUARD,
    MIN_STEP_FRACTION,
};
pub use scan::{scan_sheet, ScanOptions};
pub use seed::initial_guess;
