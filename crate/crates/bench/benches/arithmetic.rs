use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kaplansky_bench::{dense_laurent, family_member, prime};
use kaplansky_core::{gardam_unit, mul_oracle, verify_unit};

fn laurent_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("laurent_mul");
    for n in [1, 2] {
        let d = prime(5);
        let f = dense_laurent(d, n);
        let g = f.star();
        group.bench_with_input(
            BenchmarkId::from_parameter(f.len()),
            &(f, g),
            |b, (f, g)| b.iter(|| black_box(f) * black_box(g)),
        );
    }
    group.finish();
}

fn group_ring_mul(c: &mut Criterion) {
    let u = family_member(7, 2, 1);
    let v = family_member(7, -1, 0);
    let mut group = c.benchmark_group("group_ring_mul");
    group.bench_function("table", |b| {
        b.iter(|| black_box(&u).mul(black_box(&v)).unwrap())
    });
    group.bench_function("oracle", |b| {
        b.iter(|| mul_oracle(black_box(&u), black_box(&v)).unwrap())
    });
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_unit");
    group.bench_function("char2_unit", |b| {
        let u = gardam_unit();
        b.iter(|| verify_unit(black_box(&u)))
    });
    for d in [3u64, 7, 13] {
        let u = family_member(d, 2, 1);
        group.bench_with_input(BenchmarkId::new("family", d), &u, |b, u| {
            b.iter(|| verify_unit(black_box(u)))
        });
    }
    group.finish();
}

criterion_group!(benches, laurent_mul, group_ring_mul, verify);
criterion_main!(benches);
