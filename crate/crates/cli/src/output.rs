//! Row type shared by the CSV and JSON writers.

use std::io::Write;

use kzero::solver::ZeroRecord;
use serde::{Deserialize, Serialize};

/// Rounds to 12 significant digits; the shortest round-trip representation
/// of the result is what both writers emit.
pub fn sig12(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.11e}").parse().unwrap_or(x)
    } else {
        x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutputRow {
    pub nu_re: f64,
    pub nu_im: f64,
    pub label: u32,
    pub z_re: f64,
    pub z_im: f64,
    pub rho: f64,
    pub phi: f64,
    pub sheet_index: i64,
    pub residual_abs: f64,
    pub iterations: u32,
    pub converged: bool,
}

impl From<&ZeroRecord> for OutputRow {
    fn from(r: &ZeroRecord) -> Self {
        Self {
            nu_re: sig12(r.nu.re),
            nu_im: sig12(r.nu.im),
            label: r.label,
            z_re: sig12(r.z.re),
            z_im: sig12(r.z.im),
            rho: sig12(r.w.rho),
            phi: sig12(r.w.phi),
            sheet_index: r.sheet_index,
            residual_abs: sig12(r.residual_abs),
            iterations: r.iterations,
            converged: r.converged,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn write_csv<W: Write>(out: W, rows: &[OutputRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    if rows.is_empty() {
        w.write_record(HEADER)?;
    }
    w.flush()?;
    Ok(())
}

pub const HEADER: [&str; 11] = [
    "nu_re",
    "nu_im",
    "label",
    "z_re",
    "z_im",
    "rho",
    "phi",
    "sheet_index",
    "residual_abs",
    "iterations",
    "converged",
];

pub fn read_csv<R: std::io::Read>(input: R) -> csv::Result<Vec<OutputRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// One JSON object per line.
pub fn write_json<W: Write>(mut out: W, rows: &[OutputRow]) -> std::io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_rows<W: Write>(out: W, rows: &[OutputRow], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => write_csv(out, rows).map_err(std::io::Error::other),
        Format::Json => write_json(out, rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> OutputRow {
        OutputRow {
            nu_re: sig12(7.334_651_224_418_76),
            nu_im: sig12(19.678_233_901_012_3),
            label: 2,
            z_re: sig12(-1.0 / 3.0),
            z_im: sig12(-8.674_638_841_234_5e-7),
            rho: sig12(std::f64::consts::E),
            phi: sig12(-std::f64::consts::PI),
            sheet_index: -1,
            residual_abs: sig12(3.3e-13),
            iterations: 4,
            converged: true,
        }
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(sig12(-123456.78901234567), -123456.789012);
        assert!(sig12(f64::NAN).is_nan());
    }

    #[test]
    fn csv_round_trip() {
        let rows = vec![
            row(),
            OutputRow {
                label: 3,
                converged: false,
                ..row()
            },
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().next().unwrap(), HEADER.join(","));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn json_fields_match_csv_header() {
        let mut buf = Vec::new();
        write_json(&mut buf, &[row()]).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut expected: Vec<_> = HEADER.iter().map(|s| s.to_string()).collect();
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
        let back: OutputRow = serde_json::from_value(v).unwrap();
        assert_eq!(back, row());
    }
}
