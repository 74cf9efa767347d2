//! Shared inputs for the benchmarks.

use kzero::solver::table1::table1_nu;
use kzero::{ComplexValue, SheetPoint};

/// The order used throughout: |ν| = 21 on the ray arg ν = 7π/20.
pub fn order() -> ComplexValue {
    table1_nu()
}

/// A point near the first zero for [`order`].
pub fn near_zero() -> SheetPoint {
    SheetPoint::from_z(ComplexValue::new(14.0, -8.6))
}
