use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigmak_core::boundary;
use sigmak_core::search::{self, Arithmetic, SearchConfig};
use sigmak_core::symfunc;
use sigmak_core::{BoundaryGeometry, PairedSpectrum, Rational};

fn search_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_roots");
    group.sample_size(10);
    for (k, max) in [(4usize, 2000u64), (5, 1000)] {
        group.bench_with_input(BenchmarkId::new(format!("k{k}"), max), &(k, max), |b, &(k, max)| {
            b.iter(|| search::find_roots(black_box(k), max, max).unwrap())
        });
    }
    let mut big = SearchConfig::new(4, 300, 300);
    big.arithmetic = Arithmetic::Big;
    group.bench_function("k4/300/bigint", |b| b.iter(|| search::find_roots_with(black_box(&big)).unwrap()));
    group.finish();
}

fn polarization_bench(c: &mut Criterion) {
    let p = PairedSpectrum::from_tuples([
        (Rational::ratio(-1, 2), Rational::zero(), 715, "hyperbolic"),
        (Rational::half(), Rational::one(), 805, "sphere-boundary"),
    ])
    .unwrap();
    c.bench_function("sigma_pol/7,4/dim1520", |b| b.iter(|| symfunc::sigma_pol(black_box(&p), 7, 4).unwrap()));
    c.bench_function("newton_pol_diag/5,2/dim1520", |b| {
        b.iter(|| symfunc::newton_pol_diag(black_box(&p), 5, 2).unwrap())
    });
}

fn boundary_bench(c: &mut Criterion) {
    c.bench_function("h4_polynomial/cap/806,715", |b| {
        b.iter(|| boundary::h4_polynomial(BoundaryGeometry::Cap, black_box(806), 715).unwrap())
    });
    c.bench_function("s3_polynomial_blocks/ball/806,715", |b| {
        b.iter(|| boundary::s3_polynomial_blocks(BoundaryGeometry::Ball, black_box(806), 715).unwrap())
    });
}

criterion_group!(benches, search_bench, polarization_bench, boundary_bench);
criterion_main!(benches);
