use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rectcross::lemma::generate_nested_k9;
use rectcross::{color_by_hulls, count_crossings, local_search, peel_hulls, tally_by_label, Drawing, SearchParams};

fn spiral(n: usize) -> Drawing {
    // points on a slightly perturbed parabola stay in general position
    let pts: Vec<(i64, i64)> = (0..n as i64).map(|i| (i * 37 + (i * i) % 11, i * i * 3 + (i * 7) % 5)).collect();
    Drawing::from_coords(&pts).expect("general position")
}

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_crossings");
    for n in [9, 12, 20] {
        let d = spiral(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| b.iter(|| count_crossings(black_box(d)).count()));
    }
    g.finish();
}

fn peeling(c: &mut Criterion) {
    let d = generate_nested_k9(1).expect("generator");
    c.bench_function("peel_hulls_k9", |b| b.iter(|| peel_hulls(black_box(&d))));
    c.bench_function("tally_k9", |b| {
        b.iter(|| {
            let cd = color_by_hulls(black_box(&d)).expect("nested");
            tally_by_label(&cd).total()
        })
    });
}

fn searching(c: &mut Criterion) {
    let mut g = c.benchmark_group("local_search");
    g.sample_size(10);
    for n in [6, 8] {
        let params = SearchParams { restarts: 8, moves_per_restart: 2_000, stop_at_known: false, ..SearchParams::for_n(n, 7) };
        g.bench_with_input(BenchmarkId::from_parameter(n), &params, |b, p| b.iter(|| local_search(p).expect("valid").count));
    }
    g.finish();
}

criterion_group!(benches, counting, peeling, searching);
criterion_main!(benches);
