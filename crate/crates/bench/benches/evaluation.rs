use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use phi3q_bench::{marcum_points, nakagami_models, phi3_points, wishart_models};
use phi3q_core::distributions::{
    bivariate_nakagami_cdf_normalized, wishart_min_eig_cdf_marcum, wishart_min_eig_cdf_phi3,
};
use phi3q_core::marcum::{marcum_q, marcum_q_via_phi3};
use phi3q_core::oracles::marcum_quadrature;
use phi3q_core::phi3::{phi3_tilde_recursive, phi3_tilde_series, phi3_tilde_via_marcum};
use phi3q_core::{EvalConfig, MarcumArgs};

fn marcum(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = c.benchmark_group("marcum");
    for (m, a, b) in marcum_points() {
        let args = MarcumArgs::new(m, a, b).unwrap();
        let id = format!("Q{m}({a},{b})");
        group.bench_with_input(BenchmarkId::new("series", &id), &args, |bench, args| {
            bench.iter(|| marcum_q(black_box(args), &cfg))
        });
        group.bench_with_input(BenchmarkId::new("phi3", &id), &args, |bench, args| {
            bench.iter(|| marcum_q_via_phi3(black_box(args), &cfg))
        });
        group.bench_with_input(BenchmarkId::new("quadrature", &id), &args, |bench, args| {
            bench.iter(|| marcum_quadrature(black_box(args), &cfg))
        });
    }
    group.finish();
}

fn phi3(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = c.benchmark_group("phi3_tilde");
    for args in phi3_points() {
        let id = format!("b{}c{}w{}z{}", args.b, args.c, args.w, args.z);
        group.bench_with_input(BenchmarkId::new("series", &id), &args, |bench, args| {
            bench.iter(|| phi3_tilde_series(black_box(args), &cfg))
        });
        group.bench_with_input(BenchmarkId::new("marcum", &id), &args, |bench, args| {
            bench.iter(|| phi3_tilde_via_marcum(black_box(args), &cfg))
        });
        group.bench_with_input(BenchmarkId::new("recursive", &id), &args, |bench, args| {
            bench.iter(|| phi3_tilde_recursive(black_box(args), &cfg))
        });
    }
    group.finish();
}

fn distributions(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = c.benchmark_group("cdf");
    for model in nakagami_models() {
        let id = format!("m{}rho{}", model.m, model.rho);
        group.bench_with_input(BenchmarkId::new("nakagami", id), &model, |bench, model| {
            bench.iter(|| bivariate_nakagami_cdf_normalized(black_box(model), 1.0, 1.0, &cfg))
        });
    }
    for (i, model) in wishart_models().iter().enumerate() {
        let id = format!("m{}-{}", model.m, i % 2);
        group.bench_with_input(BenchmarkId::new("wishart_series", &id), model, |bench, model| {
            bench.iter(|| wishart_min_eig_cdf_phi3(black_box(model), 0.5, &cfg))
        });
        group.bench_with_input(BenchmarkId::new("wishart_marcum", &id), model, |bench, model| {
            bench.iter(|| wishart_min_eig_cdf_marcum(black_box(model), 0.5, &cfg))
        });
    }
    group.finish();
}

criterion_group!(benches, marcum, phi3, distributions);
criterion_main!(benches);
