//! Replay of the published Newton runs for the first three zeros at
//! `ν = 21·e^{i7π/20}`.

use std::f64::consts::PI;

use crate::macdonald::{zero_residual, Residual};
use crate::{ComplexValue, Result, SheetPoint};

use super::newton::{refine_zero_with, NewtonOptions, ZeroRecord};

/// Per-component tolerance on the converged zeros.
pub const ZERO_TOL: f64 = 5e-8;
/// Relative tolerance on the residual at the starting point.
pub const RESIDUAL_REL_TOL: f64 = 1e-3;
/// Allowed difference between our iteration count and the published one.
pub const ITERATION_SLACK: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Block {
    pub label: u32,
    pub seed: ComplexValue,
    pub first_residual: ComplexValue,
    pub zero: ComplexValue,
    /// Newton updates shown in the published block.
    pub published_iterations: u32,
}

pub fn table1_nu() -> ComplexValue {
    ComplexValue::from_polar(21.0, 7.0 * PI / 20.0)
}

pub const TABLE1: [Table1Block; 3] = [
    Table1Block {
        label: 1,
        seed: ComplexValue::new(14.0, -8.6),
        first_residual: ComplexValue::new(-1.273_30, -0.081_765_6),
        zero: ComplexValue::new(14.023_894_61, -8.674_638_84),
        published_iterations: 4,
    },
    Table1Block {
        label: 2,
        seed: ComplexValue::new(10.9, -8.0),
        first_residual: ComplexValue::new(-1.512_32, -0.835_798),
        zero: ComplexValue::new(10.999_838_89, -7.956_947_95),
        published_iterations: 5,
    },
    Table1Block {
        label: 3,
        seed: ComplexValue::new(8.5, -7.0),
        first_residual: ComplexValue::new(0.741_241, 3.459_69),
        zero: ComplexValue::new(8.828_896_59, -7.326_558_25),
        published_iterations: 9,
    },
];

#[derive(Debug, Clone, PartialEq)]
pub struct BlockReport {
    pub block: Table1Block,
    pub record: ZeroRecord,
    pub first_residual: ComplexValue,
    pub zero_error: f64,
    pub residual_rel_error: f64,
    pub zero_ok: bool,
    pub residual_ok: bool,
    pub iterations_ok: bool,
}

impl BlockReport {
    pub fn pass(&self) -> bool {
        self.record.converged && self.zero_ok && self.residual_ok
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table1Report {
    pub blocks: Vec<BlockReport>,
}

impl Table1Report {
    pub fn pass(&self) -> bool {
        self.blocks.iter().all(BlockReport::pass)
    }
}

pub fn verify_table1() -> Result<Table1Report> {
    verify_table1_with(zero_residual)
}

/// Replays every block with the given residual function.
pub fn verify_table1_with<F>(f: F) -> Result<Table1Report>
where
    F: Fn(ComplexValue, SheetPoint) -> Result<Residual>,
{
    let nu = table1_nu();
    let opts = NewtonOptions::default();
    let mut blocks = Vec::with_capacity(TABLE1.len());
    for block in TABLE1 {
        let (record, history) = refine_zero_with(&f, nu, SheetPoint::from_z(block.seed), &opts)?;
        let record = record.with_label(block.label);
        let first_residual = history[0].residual;
        let d = record.z - block.zero;
        let zero_error = d.re.abs().max(d.im.abs());
        let residual_rel_error =
            (first_residual - block.first_residual).norm() / block.first_residual.norm();
        blocks.push(BlockReport {
            block,
            record,
            first_residual,
            zero_error,
            residual_rel_error,
            zero_ok: zero_error < ZERO_TOL,
            residual_ok: residual_rel_error < RESIDUAL_REL_TOL,
            iterations_ok: record.iterations.abs_diff(block.published_iterations)
                <= ITERATION_SLACK,
        });
    }
    Ok(Table1Report { blocks })
}
