use std::f64::consts::FRAC_PI_4;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use kzero::gamma::log_gamma;
use kzero::macdonald::{macdonald_k, zero_residual};
use kzero::solver::{
    find_critical_modulus, initial_guess, refine_zero, trace_trajectory, NewtonOptions, NuPath,
};
use kzero::ComplexValue;
use kzero_bench::{near_zero, order};

fn evaluation(c: &mut Criterion) {
    let (nu, w) = (order(), near_zero());
    c.bench_function("log_gamma", |b| {
        b.iter(|| log_gamma(black_box(ComplexValue::new(-10.3, 30.0))))
    });
    c.bench_function("macdonald_k", |b| {
        b.iter(|| macdonald_k(black_box(nu), black_box(w)))
    });
    c.bench_function("zero_residual", |b| {
        b.iter(|| zero_residual(black_box(nu), black_box(w)))
    });
}

fn zeros(c: &mut Criterion) {
    let nu = order();
    let opts = NewtonOptions::default();
    c.bench_function("refine_zero", |b| {
        b.iter(|| refine_zero(black_box(nu), near_zero(), &opts))
    });
    c.bench_function("initial_guess_and_refine", |b| {
        b.iter(|| refine_zero(nu, initial_guess(black_box(nu), 3).unwrap(), &opts))
    });
}

fn continuation(c: &mut Criterion) {
    let mut group = c.benchmark_group("continuation");
    group.sample_size(10);
    let path = NuPath::fixed_arg(FRAC_PI_4, 8.0, 0.3, 400);
    group.bench_function("trace_trajectory", |b| {
        b.iter(|| trace_trajectory(black_box(&path), 2))
    });
    group.bench_function("find_critical_modulus", |b| {
        b.iter(|| find_critical_modulus(black_box(0.0), 1, (1.0, 2.0)))
    });
    group.finish();
}

criterion_group!(benches, evaluation, zeros, continuation);
criterion_main!(benches);
