use std::f64::consts::PI;
use std::fmt;

use crate::ComplexValue;

/// A point `z = exp(rho + i·phi)` on the Riemann surface of `log z`.
///
/// `phi` is never folded, so the sheet the point lives on is part of its
/// identity. The principal sheet is `-π < phi ≤ π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SheetPoint {
    pub rho: f64,
    pub phi: f64,
}

impl SheetPoint {
    pub const fn new(rho: f64, phi: f64) -> Self {
        Self { rho, phi }
    }

    /// Principal-sheet point for a nonzero `z`.
    pub fn from_z(z: ComplexValue) -> Self {
        Self::new(z.norm().ln(), z.arg())
    }

    /// Point with a given modulus and unbounded argument.
    pub fn from_polar(modulus: f64, phi: f64) -> Self {
        Self::new(modulus.ln(), phi)
    }

    pub fn from_log(w: ComplexValue) -> Self {
        Self::new(w.re, w.im)
    }

    /// `w = rho + i·phi`.
    pub fn log(self) -> ComplexValue {
        ComplexValue::new(self.rho, self.phi)
    }

    pub fn z(self) -> ComplexValue {
        ComplexValue::from_polar(self.rho.exp(), self.phi)
    }

    pub fn modulus(self) -> f64 {
        self.rho.exp()
    }

    /// Sheet number `k` such that `-π + 2πk < phi ≤ π + 2πk`.
    pub fn sheet_index(self) -> i64 {
        ((self.phi - PI) / (2.0 * PI)).ceil() as i64
    }

    pub fn is_principal(self) -> bool {
        self.sheet_index() == 0
    }

    /// Same point of the `z`-plane, moved by `turns` full revolutions.
    pub fn shifted_sheets(self, turns: i64) -> Self {
        Self::new(self.rho, self.phi + 2.0 * PI * turns as f64)
    }

    /// Argument reduced to the principal sheet.
    pub fn principal_phi(self) -> f64 {
        self.phi - 2.0 * PI * self.sheet_index() as f64
    }

    pub fn rotated(self, angle: f64) -> Self {
        Self::new(self.rho, self.phi + angle)
    }

    pub fn conj(self) -> Self {
        Self::new(self.rho, -self.phi)
    }

    pub fn is_finite(self) -> bool {
        self.rho.is_finite() && self.phi.is_finite()
    }

    /// Distance in the `w`-plane.
    pub fn distance(self, other: Self) -> f64 {
        (self.log() - other.log()).norm()
    }
}

impl fmt::Display for SheetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rho = {}, phi = {})", self.rho, self.phi)
    }
}
