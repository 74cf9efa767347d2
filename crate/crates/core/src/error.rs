use thiserror::Error;

use crate::solver::Trajectory;
use crate::ComplexValue;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("log-gamma pole at {0}")]
    GammaPole(ComplexValue),

    #[error("Pochhammer symbol ({0})_k vanishes at k = {1}")]
    DegeneratePochhammer(ComplexValue, usize),

    #[error("order {0} is within 1e-8 of an integer; the ascending-series form is singular there")]
    IntegerOrder(ComplexValue),

    #[error("argument {arg} outside supported range {range}")]
    Range { arg: String, range: &'static str },

    #[error("{0}")]
    Domain(String),

    #[error("estimate outside its regime: {0}")]
    Regime(String),

    #[error("no seeding regime for nu = {nu}, label {label}: {detail}")]
    NoRegime {
        nu: ComplexValue,
        label: u32,
        detail: String,
    },

    #[error("continuation stalled at nu = {nu} after {} records", partial.records.len())]
    ContinuationStall {
        nu: ComplexValue,
        partial: Box<Trajectory>,
    },

    #[error("trajectory does not cross arg z = -pi inside [{lo}, {hi}]")]
    NoCrossing { lo: f64, hi: f64 },

    #[error("Newton iteration failed to converge from seed {0}")]
    NoConvergence(ComplexValue),
}
