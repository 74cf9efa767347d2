//! Command-line front end for the `kzero` library.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical failure.

pub mod output;
pub mod parse;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kzero::macdonald::{macdonald_parts, zero_residual};
use kzero::solver::table1::verify_table1;
use kzero::solver::{
    find_critical_modulus_with, initial_guess, refine_zero, trace_trajectory, CriticalOptions,
    DetourSign, NewtonOptions, NuPath, Trajectory, ZeroRecord,
};
use kzero::{ComplexValue, Error, Order, SheetPoint};

use output::{sig12, write_rows, Format, OutputRow};
use parse::{parse_angle, parse_angle_range, parse_modulus_range, parse_nu, parse_pair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kzero",
    version,
    about = "Zeros of the Macdonald function K_nu(z) for complex order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Canon {
    /// Fold nu into the closed first quadrant before computing.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set, value_name = "BOOL")]
    pub canonicalize: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate K_nu(z) by the ascending series.
    Eval {
        /// Order: a+bi, bi, M@Fpi or a real number.
        #[arg(long, value_parser = parse_nu, allow_hyphen_values = true)]
        nu: ComplexValue,
        /// Principal-sheet point `re,im` (a lone number is real).
        #[arg(long, value_parser = parse_pair, conflicts_with = "w", required_unless_present = "w", allow_hyphen_values = true)]
        z: Option<(f64, f64)>,
        /// Logarithmic coordinates `rho,phi`, phi selecting the sheet.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        w: Option<(f64, f64)>,
        /// Also print the zero residual E_nu and its w-derivative.
        #[arg(long)]
        residual: bool,
        #[command(flatten)]
        canon: Canon,
    },
    /// Locate one zero by Newton iteration.
    Zero {
        #[arg(long, value_parser = parse_nu, allow_hyphen_values = true)]
        nu: ComplexValue,
        /// Zero label n >= 1; selects the asymptotic seed.
        #[arg(long, required_unless_present_any = ["seed", "seed_w"])]
        label: Option<u32>,
        /// Explicit seed `re,im` on the principal sheet.
        #[arg(long, value_parser = parse_pair, conflicts_with = "seed_w", allow_hyphen_values = true)]
        seed: Option<(f64, f64)>,
        /// Explicit seed `rho,phi`.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        seed_w: Option<(f64, f64)>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        canon: Canon,
    },
    /// Follow zeros along a path in nu.
    Trajectory(TrajectoryArgs),
    /// Find |nu| on a ray at which a zero leaves the principal sheet.
    Critical {
        /// Ray direction arg nu.
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        arg_nu: f64,
        #[arg(long)]
        label: u32,
        /// `lo,hi` search interval for |nu|.
        #[arg(long, value_parser = parse_pair)]
        bracket: (f64, f64),
        #[arg(long, value_enum, default_value_t = SignArg::Minus)]
        detour_sign: SignArg,
        #[command(flatten)]
        canon: Canon,
    },
    /// Replay the reference Newton table and compare.
    VerifyTable1,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["fixed_arg", "fixed_mod"]))]
pub struct TrajectoryArgs {
    /// Keep arg nu fixed; requires --mod.
    #[arg(long, value_parser = parse_angle, requires = "modulus", allow_hyphen_values = true)]
    pub fixed_arg: Option<f64>,
    /// `from:to` moduli for --fixed-arg.
    #[arg(long = "mod", id = "modulus", value_parser = parse_modulus_range)]
    pub modulus: Option<(f64, f64)>,
    /// Keep |nu| fixed; requires --arg.
    #[arg(long, requires = "arg")]
    pub fixed_mod: Option<f64>,
    /// `from:to` arguments for --fixed-mod.
    #[arg(long, value_parser = parse_angle_range, allow_hyphen_values = true)]
    pub arg: Option<(f64, f64)>,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    /// Comma-separated zero labels.
    #[arg(long, visible_alias = "labels", value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    pub label: Vec<u32>,
    /// Output file; with several labels one file per label, suffixed `_labelN`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    pub detour_sign: SignArg,
    /// Radius of the semicircle around half-integer orders.
    #[arg(long)]
    pub detour_epsilon: Option<f64>,
    #[command(flatten)]
    pub canon: Canon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for DetourSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => DetourSign::Plus,
            SignArg::Minus => DetourSign::Minus,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Numerical(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Numerical(format!("i/o: {e}"))
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "kzero: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Eval {
            nu,
            z,
            w,
            residual,
            canon,
        } => cmd_eval(nu, z, w, residual, canon, out),
        Command::Zero {
            nu,
            label,
            seed,
            seed_w,
            format,
            canon,
        } => cmd_zero(nu, label, seed, seed_w, format, canon, out, err),
        Command::Trajectory(args) => cmd_trajectory(&args, out, err),
        Command::Critical {
            arg_nu,
            label,
            bracket,
            detour_sign,
            canon,
        } => cmd_critical(arg_nu, label, bracket, detour_sign, canon, out, err),
        Command::VerifyTable1 => cmd_verify_table1(out),
    }
}

fn order_for(nu: ComplexValue, canon: Canon) -> Order {
    if canon.canonicalize {
        Order::new(nu)
    } else {
        Order::identity(nu)
    }
}

fn fmt_r(x: f64) -> String {
    let x = sig12(x);
    if x == 0.0 || (1e-4..1e12).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn fmt_c(z: ComplexValue) -> String {
    format!("({}, {})", fmt_r(z.re), fmt_r(z.im))
}

fn cmd_eval(
    nu: ComplexValue,
    z: Option<(f64, f64)>,
    w: Option<(f64, f64)>,
    residual: bool,
    canon: Canon,
    out: &mut dyn Write,
) -> CliResult {
    let point = match (z, w) {
        (Some((re, im)), _) => {
            if re == 0.0 && im == 0.0 {
                return Err(CliError::Usage("z = 0 is a branch point".into()));
            }
            SheetPoint::from_z(ComplexValue::new(re, im))
        }
        (None, Some((rho, phi))) => SheetPoint::new(rho, phi),
        (None, None) => return Err(CliError::Usage("one of --z or --w is required".into())),
    };
    let order = order_for(nu, canon);
    // K is even in nu, and conjugating nu conjugates K at the conjugate point.
    let at = if order.conj_applied {
        point.conj()
    } else {
        point
    };
    let parts = macdonald_parts(order.canonical_nu, at)?;
    let mut value = parts.value();
    if order.conj_applied {
        value = value.conj();
    }
    writeln!(out, "nu: {}", fmt_c(nu))?;
    writeln!(out, "z: {}", fmt_c(point.z()))?;
    writeln!(out, "w: {}", fmt_c(point.log()))?;
    writeln!(out, "sheet_index: {}", point.sheet_index())?;
    writeln!(out, "symmetry: {}", order.describe())?;
    writeln!(out, "K: {}", fmt_c(value))?;
    writeln!(
        out,
        "terms_used: {} {}",
        parts.minus.terms_used, parts.plus.terms_used
    )?;
    writeln!(
        out,
        "truncation_ok: {}",
        parts.minus.truncation_ok && parts.plus.truncation_ok
    )?;
    if residual {
        // The residual is tied to the order as given, not its canonical image.
        let r = zero_residual(nu, point)?;
        writeln!(out, "E: {}", fmt_c(r.value))?;
        writeln!(out, "dE/dw: {}", fmt_c(r.derivative))?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_zero(
    nu: ComplexValue,
    label: Option<u32>,
    seed: Option<(f64, f64)>,
    seed_w: Option<(f64, f64)>,
    format: Format,
    canon: Canon,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    if label == Some(0) {
        return Err(CliError::Usage("labels start at 1".into()));
    }
    let order = order_for(nu, canon);
    let explicit = match (seed, seed_w) {
        (Some((re, im)), _) => Some(SheetPoint::from_z(ComplexValue::new(re, im))),
        (None, Some((rho, phi))) => Some(SheetPoint::new(rho, phi)),
        _ => None,
    };
    let seed = match explicit {
        Some(s) => order.map_zero_back(s),
        None => initial_guess(order.canonical_nu, label.unwrap_or(1))?,
    };
    let rec = refine_zero(order.canonical_nu, seed, &NewtonOptions::default())?;
    let rec = unfold(&order, rec).with_label(label.unwrap_or(0));
    if !order.is_identity() {
        writeln!(err, "symmetry: {}", order.describe())?;
    }
    write_rows(&mut *out, &[OutputRow::from(&rec)], format)?;
    if !rec.converged {
        return Err(CliError::Numerical(format!(
            "no convergence after {} iterations, |E| = {:e}",
            rec.iterations, rec.residual_abs
        )));
    }
    Ok(())
}

/// Rewrites a record computed at the canonical order in terms of the original.
fn unfold(order: &Order, rec: ZeroRecord) -> ZeroRecord {
    let w = order.map_zero_back(rec.w);
    let mut nu = if order.conj_applied {
        rec.nu.conj()
    } else {
        rec.nu
    };
    if order.negate_applied {
        nu = -nu;
    }
    ZeroRecord::new(
        rec.label,
        nu,
        w,
        rec.residual_abs,
        rec.iterations,
        rec.converged,
    )
}

fn unit(arg: f64) -> ComplexValue {
    ComplexValue::from_polar(1.0, arg)
}

/// The requested path, folded into the first quadrant when both ends fold
/// the same way.
fn build_path(args: &TrajectoryArgs, err: &mut dyn Write) -> Result<(NuPath, Order), CliError> {
    if args.steps == 0 {
        return Err(CliError::Usage("--steps must be positive".into()));
    }
    if let Some(eps) = args.detour_epsilon {
        if !(eps > 0.0) {
            return Err(CliError::Usage("--detour-epsilon must be positive".into()));
        }
    }
    let (path, order) = match (args.fixed_arg, args.modulus, args.fixed_mod, args.arg) {
        (Some(arg), Some((from, to)), None, _) => {
            let order = order_for(unit(arg), args.canon);
            (
                NuPath::fixed_arg(order.canonical_nu.arg(), from, to, args.steps),
                order,
            )
        }
        (None, _, Some(m), Some((from, to))) => {
            if !(m > 0.0) {
                return Err(CliError::Usage("--fixed-mod must be positive".into()));
            }
            let a = order_for(unit(from), args.canon);
            let b = order_for(unit(to), args.canon);
            if a.conj_applied == b.conj_applied && a.negate_applied == b.negate_applied {
                (
                    NuPath::fixed_modulus(
                        m,
                        a.canonical_nu.arg(),
                        b.canonical_nu.arg(),
                        args.steps,
                    ),
                    a,
                )
            } else {
                writeln!(
                    err,
                    "note: arc leaves the first quadrant; traced without canonicalization"
                )?;
                (
                    NuPath::fixed_modulus(m, from, to, args.steps),
                    Order::identity(unit(from)),
                )
            }
        }
        _ => {
            return Err(CliError::Usage(
                "use --fixed-arg with --mod, or --fixed-mod with --arg".into(),
            ))
        }
    };
    let path = match args.detour_epsilon {
        Some(eps) => path.with_detour(args.detour_sign.into(), eps),
        None => path.with_detour_sign(args.detour_sign.into()),
    };
    path.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((path, order))
}

fn label_file(out: &Path, label: u32) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}_label{label}.{}", ext.to_string_lossy()),
        None => format!("{stem}_label{label}"),
    };
    out.with_file_name(name)
}

fn cmd_trajectory(args: &TrajectoryArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let labels = if args.label.is_empty() {
        vec![1]
    } else {
        args.label.clone()
    };
    let (path, order) = build_path(args, err)?;
    if !order.is_identity() {
        writeln!(err, "symmetry: {}", order.describe())?;
    }

    let mut all_rows = Vec::new();
    let mut failure = None;
    for &label in &labels {
        let (traj, stall): (Trajectory, Option<Error>) = match trace_trajectory(&path, label) {
            Ok(t) => (t, None),
            Err(Error::ContinuationStall { nu, partial }) => {
                let e = Error::ContinuationStall {
                    nu,
                    partial: partial.clone(),
                };
                (*partial, Some(e))
            }
            Err(e) => return Err(e.into()),
        };
        let rows: Vec<OutputRow> = traj
            .records
            .iter()
            .map(|r| OutputRow::from(&unfold(&order, *r)))
            .collect();

        let crossing = traj.left_principal_at.map(|nu| {
            let nu = if order.conj_applied { nu.conj() } else { nu };
            if order.negate_applied {
                -nu
            } else {
                nu
            }
        });
        let summary = match crossing {
            Some(nu) => format!(
                "label {label}: {} rows, left_principal_at nu = {} (|nu| = {}, arg = {})",
                rows.len(),
                fmt_c(nu),
                fmt_r(nu.norm()),
                fmt_r(nu.arg())
            ),
            None => format!("label {label}: {} rows, left_principal_at none", rows.len()),
        };
        writeln!(err, "{summary}")?;

        match &args.out {
            Some(p) if labels.len() > 1 => write_file(&label_file(p, label), &rows, args.format)?,
            Some(p) => write_file(p, &rows, args.format)?,
            None => all_rows.extend(rows),
        }
        if let Some(e) = stall {
            writeln!(err, "label {label}: {e}; partial output kept")?;
            failure.get_or_insert(e);
        }
    }
    if args.out.is_none() {
        write_rows(&mut *out, &all_rows, args.format)?;
    }
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn write_file(path: &Path, rows: &[OutputRow], format: Format) -> CliResult {
    let file = File::create(path)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    write_rows(&mut w, rows, format)?;
    w.flush()?;
    Ok(())
}

fn cmd_critical(
    arg_nu: f64,
    label: u32,
    bracket: (f64, f64),
    sign: SignArg,
    canon: Canon,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    if label == 0 {
        return Err(CliError::Usage("labels start at 1".into()));
    }
    let (lo, hi) = bracket;
    if !(lo > 0.0 && hi > 0.0) || lo == hi {
        return Err(CliError::Usage(format!(
            "bracket must be two distinct positive moduli, got {lo},{hi}"
        )));
    }
    let order = order_for(unit(arg_nu), canon);
    if !order.is_identity() {
        writeln!(err, "symmetry: {}", order.describe())?;
    }
    let opts = CriticalOptions {
        detour_sign: sign.into(),
        ..CriticalOptions::default()
    };
    let m = find_critical_modulus_with(order.canonical_nu.arg(), label, bracket, &opts)?;
    writeln!(out, "{}", fmt_r(m))?;
    Ok(())
}

fn cmd_verify_table1(out: &mut dyn Write) -> CliResult {
    let report = verify_table1()?;
    writeln!(out, "label,z_re,z_im,zero_error,first_residual_rel_error,iterations,published_iterations,status")?;
    for b in &report.blocks {
        writeln!(
            out,
            "{},{},{},{:.3e},{:.3e},{},{},{}",
            b.block.label,
            sig12(b.record.z.re),
            sig12(b.record.z.im),
            b.zero_error,
            b.residual_rel_error,
            b.record.iterations,
            b.block.published_iterations,
            if b.pass() { "PASS" } else { "FAIL" }
        )?;
    }
    if report.pass() {
        writeln!(out, "PASS: {} zeros matched", report.blocks.len())?;
        Ok(())
    } else {
        writeln!(out, "FAIL")?;
        Err(CliError::Numerical("table replay does not match".into()))
    }
}
