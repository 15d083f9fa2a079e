use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use trirealize::theorems::{ScenarioName, DEFAULT_TOL};
use trirealize::{enumerate_patterns, realizability_verdict, realize, run_verification, Tolerances};
use trirealize_bench::{hexagon_fixture, morley_fixture, wheel_fixture};

fn verdict(c: &mut Criterion) {
    let mut g = c.benchmark_group("verdict");
    for n in [3, 5, 8] {
        let (f, m) = wheel_fixture(n);
        g.bench_with_input(BenchmarkId::new("wheel", n), &n, |b, _| {
            b.iter(|| realizability_verdict(black_box(&f), black_box(&m), &Tolerances::AUTHORED).unwrap())
        });
    }
    let (f, m) = morley_fixture();
    g.bench_function("morley", |b| {
        b.iter(|| realizability_verdict(black_box(&f), black_box(&m), &Tolerances::MEASURED).unwrap())
    });
    g.finish();
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("realize");
    let (f, m) = morley_fixture();
    g.bench_function("morley", |b| b.iter(|| realize(black_box(&f), black_box(&m), 1e-7).unwrap()));
    let (f, m) = hexagon_fixture();
    g.bench_function("hexagon", |b| b.iter(|| realize(black_box(&f), black_box(&m), 1e-7).unwrap()));
    let (f, m) = wheel_fixture(8);
    g.bench_function("wheel8", |b| b.iter(|| realize(black_box(&f), black_box(&m), 1e-7).unwrap()));
    g.finish();
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("patterns");
    for n in [3, 4, 5, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate_patterns(n).unwrap()));
    }
    g.finish();
}

fn campaign(c: &mut Criterion) {
    c.bench_function("campaign/morley_classic_25", |b| {
        b.iter(|| run_verification(ScenarioName::MorleyClassic, 25, 1, DEFAULT_TOL, false))
    });
}

criterion_group!(benches, verdict, construction, census, campaign);
criterion_main!(benches);
