use std::f64::consts::PI;

use crate::{ComplexValue, Result, SheetPoint};

use super::newton::{refine_zero, NewtonOptions, ZeroRecord};

/// Grid of Newton seeds covering one sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub rho_min: f64,
    pub rho_max: f64,
    pub rho_points: usize,
    pub phi_points: usize,
    /// Zeros closer than this in `w` are the same zero.
    pub merge_tol: f64,
    /// Zeros within this distance of a sheet edge `phi = −π + 2πk` belong to
    /// the sheet below, matching the `−π < phi ≤ π` convention.
    pub edge_tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            rho_min: -2.0,
            rho_max: 2.0,
            rho_points: 9,
            phi_points: 16,
            merge_tol: 1e-6,
            edge_tol: 1e-9,
        }
    }
}

fn sheet_of(w: SheetPoint, edge_tol: f64) -> i64 {
    let k = w.sheet_index();
    let lower_edge = -PI + 2.0 * PI * k as f64;
    if (w.phi - lower_edge).abs() < edge_tol {
        k - 1
    } else {
        k
    }
}

/// Distinct zeros of `K_ν` on sheet `sheet` with `rho` inside the scan window,
/// found by Newton from a grid of seeds. Seeds whose iteration fails or
/// leaves the sheet are dropped.
pub fn scan_sheet(nu: ComplexValue, sheet: i64, opts: &ScanOptions) -> Result<Vec<ZeroRecord>> {
    crate::macdonald::check_order(nu)?;
    let newton = NewtonOptions {
        max_iter: 60,
        max_step: 0.25,
        ..Default::default()
    };
    let mut found: Vec<ZeroRecord> = Vec::new();
    for i in 0..opts.rho_points {
        let rho = opts.rho_min
            + (opts.rho_max - opts.rho_min) * i as f64 / (opts.rho_points - 1).max(1) as f64;
        for j in 0..opts.phi_points {
            let phi = -PI + 2.0 * PI * (sheet as f64 + (j as f64 + 0.5) / opts.phi_points as f64);
            let Ok(rec) = refine_zero(nu, SheetPoint::new(rho, phi), &newton) else {
                continue;
            };
            if !rec.converged || sheet_of(rec.w, opts.edge_tol) != sheet {
                continue;
            }
            if rec.w.rho < opts.rho_min - 1.0 || rec.w.rho > opts.rho_max + 1.0 {
                continue;
            }
            if found.iter().all(|f| f.w.distance(rec.w) > opts.merge_tol) {
                found.push(rec);
            }
        }
    }
    found.sort_by(|a, b| a.w.phi.total_cmp(&b.w.phi));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_halves_has_one_zero_per_sheet() {
        let nu = ComplexValue::new(1.5, 0.0);
        for sheet in -1..=1 {
            let zeros = scan_sheet(nu, sheet, &ScanOptions::default()).unwrap();
            assert_eq!(zeros.len(), 1, "sheet {sheet}: {zeros:?}");
            assert!((zeros[0].z - ComplexValue::new(-1.0, 0.0)).norm() < 1e-10);
        }
    }
}
