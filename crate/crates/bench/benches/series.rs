use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use jpl_core::blocks::{build_e41, build_eta, build_theta};
use jpl_core::jacobi::hecke_minus;
use jpl_core::parse_block;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for prec in [96i64, 240, 480] {
        let eta = build_eta(prec);
        let theta = build_theta(prec);
        g.bench_with_input(BenchmarkId::new("eta^6*theta^2", prec), &prec, |b, _| {
            b.iter(|| black_box(eta.pow(6).mul(&theta.pow(2))))
        });
        g.bench_with_input(BenchmarkId::new("parse_quintuple", prec), &prec, |b, &p| {
            b.iter(|| parse_block(black_box("eta*theta(2)/theta(1)"), p).unwrap())
        });
    }
    g.finish();
}

fn hecke(c: &mut Criterion) {
    let e = build_e41(24 * 30);
    let mut g = c.benchmark_group("hecke");
    for m in [2i64, 3, 5] {
        g.bench_with_input(BenchmarkId::new("e41", m), &m, |b, &m| {
            b.iter(|| hecke_minus(&e, m, 1).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, products, hecke);
criterion_main!(benches);
