//! Acceptance criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p kzero-core --test acceptance -- --nocapture` to see them.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::{Duration, Instant};

use kzero::asymptotics::{large_nu_zero, small_nu_zero_crude};
use kzero::macdonald::{macdonald_k, macdonald_parts, zero_residual};
use kzero::solver::table1::{table1_nu, verify_table1, TABLE1};
use kzero::solver::{
    find_critical_modulus, initial_guess, refine_zero, scan_sheet, trace_trajectory, DetourSign,
    NewtonOptions, NuPath, ScanOptions,
};
use kzero::{ComplexValue, SheetPoint};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn run(name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let pass = out.pass && elapsed < budget;
    println!(
        "[{}] {name} ({:.2?} of {:.0?}): {}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        budget,
        out.detail
    );
    pass
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn table1_replay() -> Outcome {
    let report = match verify_table1() {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let detail = report
        .blocks
        .iter()
        .map(|b| {
            format!(
                "z{}: err {:.1e}, E0 rel {:.1e}, {} it",
                b.block.label, b.zero_error, b.residual_rel_error, b.record.iterations
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    outcome(report.pass(), detail)
}

fn critical_moduli() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for s in 1..=3u32 {
        let expected = 2.0 * s as f64 - 0.5;
        match find_critical_modulus(0.0, s, (expected - 0.5, expected + 0.5)) {
            Ok(m) => {
                pass &= (m - expected).abs() < 1e-3;
                parts.push(format!("s={s}: {m:.6}"));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("s={s}: {e}"));
            }
        }
    }
    outcome(pass, parts.join(", "))
}

fn half_integer_oracle() -> Outcome {
    // K_{3/2} ∝ (1 + 1/z), K_{5/2} ∝ (1 + 3/z + 3/z²)
    let cases: [(f64, Vec<ComplexValue>); 2] = [
        (1.5, vec![c(-1.0, 0.0)]),
        (
            2.5,
            vec![c(-1.5, 0.75f64.sqrt()), c(-1.5, -(0.75f64.sqrt()))],
        ),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (nu, roots) in cases {
        for sheet in -2..=1 {
            let zeros = match scan_sheet(c(nu, 0.0), sheet, &ScanOptions::default()) {
                Ok(z) => z,
                Err(e) => return outcome(false, e.to_string()),
            };
            let matched = zeros.len() == roots.len()
                && roots
                    .iter()
                    .all(|r| zeros.iter().any(|z| (z.z - r).norm() < 1e-10));
            pass &= matched;
            if !matched {
                parts.push(format!("nu={nu} sheet {sheet}: {} zeros", zeros.len()));
            }
        }
        parts.push(format!("nu={nu}: {} per sheet", roots.len()));
    }
    outcome(pass, parts.join(", "))
}

fn pure_imaginary_law() -> Outcome {
    let nu = c(0.0, 10.0);
    let opts = NewtonOptions::default();
    let mut zeros = Vec::new();
    for n in 1..=14u32 {
        let seed = match initial_guess(nu, n) {
            Ok(s) => s,
            Err(e) => return outcome(false, format!("label {n}: {e}")),
        };
        match refine_zero(nu, seed, &opts) {
            Ok(r) if r.converged => zeros.push(r),
            other => return outcome(false, format!("label {n}: {other:?}")),
        }
    }
    let target = (-PI / 10.0).exp();
    let mut pass = zeros.iter().all(|r| r.z.im.abs() < 1e-9 && r.z.re > 0.0);
    pass &= zeros.windows(2).all(|p| p[1].z.re < p[0].z.re);
    let mut worst: f64 = 0.0;
    for n in 5..zeros.len() {
        let ratio = zeros[n].z.re / zeros[n - 1].z.re;
        worst = worst.max((ratio / target - 1.0).abs());
    }
    pass &= worst < 0.01;
    outcome(
        pass,
        format!("worst ratio deviation {worst:.2e} for n >= 5"),
    )
}

fn asymptotic_seed_quality() -> Outcome {
    let nu = table1_nu();
    let tols = [2e-3, 5e-3, 1e-2];
    let mut pass = true;
    let mut parts = Vec::new();
    for (block, tol) in TABLE1.iter().zip(tols) {
        let s = block.label as usize;
        let seed = large_nu_zero(nu, s).unwrap();
        let rel = (seed.z() - block.zero).norm() / block.zero.norm();
        let rec = refine_zero(nu, seed, &NewtonOptions::default()).unwrap();
        let ok =
            rel < tol && rec.converged && rec.iterations <= 8 && (rec.z - block.zero).norm() < 1e-7;
        pass &= ok;
        parts.push(format!("s={s}: rel {rel:.1e}, {} it", rec.iterations));
    }
    outcome(pass, parts.join(", "))
}

fn spiral() -> Outcome {
    let path = NuPath::fixed_arg(FRAC_PI_4, 8.0, 0.3, 400);
    let traj = match trace_trajectory(&path, 1) {
        Ok(t) => t,
        Err(e) => return outcome(false, e.to_string()),
    };
    let phis: Vec<f64> = traj.records.iter().map(|r| r.w.phi).collect();
    let monotone = phis.windows(2).all(|p| p[1] < p[0]);
    let last = traj.records.last().unwrap();
    let predicted = small_nu_zero_crude(last.nu, 1).unwrap();
    let rho_gap = (last.w.rho - predicted.rho).abs();
    let pass = monotone && last.w.phi < -PI && rho_gap < 1.0;
    outcome(
        pass,
        format!(
            "monotone {monotone}, final phi {:.3}, rho {:.3} vs {:.3}",
            last.w.phi, last.w.rho, predicted.rho
        ),
    )
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();

    // Order negation and conjugation on a deterministic grid; the random versions live
    // in the proptest suite.
    let mut worst_sym: f64 = 0.0;
    let mut worst_conj: f64 = 0.0;
    for i in 0..40 {
        let t = i as f64;
        let nu = c(0.37 + 0.23 * t % 9.0, -4.0 + 0.31 * t % 8.0);
        let w = SheetPoint::new(-1.0 + 0.07 * t % 3.0, -3.0 + 0.17 * t % 6.0);
        let (Ok(k), Ok(km), Ok(kc)) = (
            macdonald_k(nu, w),
            macdonald_k(-nu, w),
            macdonald_k(nu.conj(), w.conj()),
        ) else {
            continue;
        };
        worst_sym = worst_sym.max((km - k).norm() / k.norm());
        worst_conj = worst_conj.max((kc - k.conj()).norm() / k.norm());
    }
    if worst_sym > 1e-12 {
        failures.push(format!("symmetry {worst_sym:.1e}"));
    }
    if worst_conj > 1e-12 {
        failures.push(format!("conjugation {worst_conj:.1e}"));
    }

    // Rotation of a located zero onto a Hankel zero.
    let nu = table1_nu();
    let rec = refine_zero(nu, large_nu_zero(nu, 1).unwrap(), &NewtonOptions::default()).unwrap();
    let h = kzero::solver::hankel_zeros_from_macdonald(&rec).unwrap();
    if !h.converged || (h.z - c(0.0, 1.0) * rec.z).norm() > 1e-12 * rec.z.norm() {
        failures.push("rotation".into());
    }

    // Analytic derivative against central differences.
    let w = SheetPoint::new(1.2, -0.4);
    let r = zero_residual(c(3.3, 2.1), w).unwrap();
    let step = 1e-6;
    let up = zero_residual(c(3.3, 2.1), SheetPoint::new(w.rho + step, w.phi)).unwrap();
    let dn = zero_residual(c(3.3, 2.1), SheetPoint::new(w.rho - step, w.phi)).unwrap();
    let fd = (up.value - dn.value) / (2.0 * step);
    if (fd - r.derivative).norm() > 1e-6 * r.derivative.norm() {
        failures.push("derivative".into());
    }

    // Series truncation diagnostics.
    let parts = macdonald_parts(nu, rec.w).unwrap();
    if !parts.minus.truncation_ok || !parts.plus.truncation_ok || parts.minus.terms_used >= 100 {
        failures.push("truncation flags".into());
    }
    if parts.value().norm() > 1e-8 * parts.term_scale() {
        failures.push("K small at zero".into());
    }

    // Trajectory reversibility.
    let path = NuPath::fixed_arg(0.9, 12.0, 6.0, 60);
    match trace_trajectory(&path, 1) {
        Ok(fwd) => {
            let end = *fwd.records.last().unwrap();
            let back = kzero::solver::trace_trajectory_with(
                &path.reversed(),
                1,
                Some(end.w),
                &NewtonOptions::default(),
            );
            match back {
                Ok(b) => {
                    let d = b.records.last().unwrap().w.distance(fwd.records[0].w);
                    if d > 1e-8 {
                        failures.push(format!("reversal {d:.1e}"));
                    }
                }
                Err(e) => failures.push(format!("reversal: {e}")),
            }
        }
        Err(e) => failures.push(format!("forward trace: {e}")),
    }

    // Detour-sign divergence across the branch point at nu = 1/2.
    let ends: Vec<Option<SheetPoint>> = [DetourSign::Plus, DetourSign::Minus]
        .into_iter()
        .map(|sign| {
            let p = NuPath::segment(c(1.2, 0.0), c(0.3, 0.0), 90).with_detour(sign, 1e-3);
            trace_trajectory(&p, 1)
                .ok()
                .map(|t| t.records.last().unwrap().w)
        })
        .collect();
    match (ends[0], ends[1]) {
        (Some(a), Some(b)) if a.distance(b) > 1e-3 => {}
        other => failures.push(format!("detour divergence: {other:?}")),
    }

    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "all properties hold".into()
        } else {
            failures.join("; ")
        },
    )
}

#[test]
fn acceptance() {
    println!();
    let results = [
        run(
            "1 reference table replay",
            Duration::from_secs(1),
            table1_replay,
        ),
        run(
            "2 critical moduli for real order",
            Duration::from_secs(10),
            critical_moduli,
        ),
        run(
            "3 half-integer polynomial zeros",
            Duration::from_secs(30),
            half_integer_oracle,
        ),
        run(
            "4 pure-imaginary geometric law",
            Duration::from_secs(30),
            pure_imaginary_law,
        ),
        run(
            "5 asymptotic seed quality",
            Duration::from_secs(5),
            asymptotic_seed_quality,
        ),
        run("6 small-order spiral", Duration::from_secs(30), spiral),
        run(
            "7 property suites",
            Duration::from_secs(120),
            property_suites,
        ),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}

#[test]
fn pure_imaginary_zero_is_on_real_axis_for_fixed_modulus_path() {
    let path = NuPath::fixed_modulus(10.0, 1e-3, FRAC_PI_2, 100);
    let traj = trace_trajectory(&path, 1).unwrap();
    let end = traj.records.last().unwrap();
    let nu = c(0.0, 10.0);
    let independent =
        refine_zero(nu, initial_guess(nu, 1).unwrap(), &NewtonOptions::default()).unwrap();
    assert!(end.w.distance(independent.w) < 1e-9);
}
