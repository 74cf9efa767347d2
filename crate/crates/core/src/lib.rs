//! Zeros of the Macdonald function `K_ν(z)` for complex order `ν`.
//!
//! The crate evaluates `K_ν(z)` from its two ascending series on any sheet of
//! the logarithmic Riemann surface, provides closed-form approximations to the
//! `z`-zeros in the small-`|ν|`, large-`|ν|` and logarithmic regimes, and
//! refines them with Newton's method in the variable `w = log z`. Zeros can
//! be followed along paths in the `ν`-plane, including the search for the
//! modulus at which a zero leaves the principal sheet.
//!
//! ```
//! use kzero::{solver, ComplexValue};
//!
//! let nu = ComplexValue::from_polar(21.0, 0.35 * std::f64::consts::PI);
//! let seed = solver::initial_guess(nu, 1).unwrap();
//! let zero = solver::refine_zero(nu, seed, &Default::default()).unwrap();
//! assert!(zero.converged);
//! assert!((zero.z - ComplexValue::new(14.02389461, -8.67463884)).norm() < 5e-8);
//! ```

pub mod airy;
pub mod asymptotics;
mod error;
pub mod gamma;
pub mod macdonald;
mod order;
pub mod series;
mod sheet;
pub mod solver;

pub use error::{Error, Result};
pub use order::Order;
pub use sheet::SheetPoint;

/// Double-precision complex number used for orders, arguments and values.
pub type ComplexValue = num_complex::Complex64;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
