//! Criterion benchmarks for the data-parallel hot paths. Run with the
//! default features for the rayon build and with `--no-default-features`
//! for the sequential baseline; comparing the two reports shows the
//! parallel speedup.

use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use num_complex::Complex64;
use orbitfun::{
    grids, transform, AlgebraData, SampleSet, Series, TransformKind, TransformPlan,
    DEFAULT_ORBIT_CAP,
};

fn bench_enumerate(c: &mut Criterion) {
    let f4 = AlgebraData::new(Series::F, 4).unwrap();
    c.bench_function("enumerate_f/F4_M24", |b| {
        b.iter(|| grids::enumerate_f(black_box(&f4), 24, false))
    });
}

fn bench_count(c: &mut Criterion) {
    let e8 = AlgebraData::new(Series::E, 8).unwrap();
    c.bench_function("count_f/E8_M210", |b| {
        b.iter(|| grids::count_f(black_box(&e8), 210))
    });
}

fn bench_generate_r(c: &mut Criterion) {
    let e8 = AlgebraData::new(Series::E, 8).unwrap();
    c.bench_function("generate_r/E8", |b| {
        b.iter(|| grids::generate_r(black_box(&e8)))
    });
}

fn bench_plan_build(c: &mut Criterion) {
    let a3 = AlgebraData::new(Series::A, 3).unwrap();
    c.bench_function("plan_build/A3_M8_C", |b| {
        b.iter(|| TransformPlan::new(black_box(&a3), 8, TransformKind::C, DEFAULT_ORBIT_CAP))
    });
}

fn bench_forward(c: &mut Criterion) {
    let a3 = AlgebraData::new(Series::A, 3).unwrap();
    let plan = TransformPlan::new(&a3, 8, TransformKind::C, DEFAULT_ORBIT_CAP).unwrap();
    let samples = SampleSet::from_fn(&a3, 8, TransformKind::C, |p| {
        Complex64::new(p.coords()[0] as f64, p.coords()[1] as f64)
    });
    c.bench_function("ctransform/A3_M8", |b| {
        b.iter_batched(
            || samples.clone(),
            |f| plan.forward(black_box(&f)),
            BatchSize::SmallInput,
        )
    });
}

fn bench_gram(c: &mut Criterion) {
    let b3 = AlgebraData::new(Series::B, 3).unwrap();
    c.bench_function("verify_orthogonality/B3_M6_C", |b| {
        b.iter(|| {
            transform::verify_orthogonality(
                black_box(&b3),
                6,
                TransformKind::C,
                1e-8,
                DEFAULT_ORBIT_CAP,
            )
        })
    });
}

criterion_group!(
    benches,
    bench_enumerate,
    bench_count,
    bench_generate_r,
    bench_plan_build,
    bench_forward,
    bench_gram
);
criterion_main!(benches);
