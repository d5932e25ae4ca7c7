use criterion::{BenchmarkId, Criterion, Throughput};
use repwords_core::{
    find_squares, is_cubefree, mapped_stream_prefix, max_square_root, search, AvoidancePredicate,
    Morphism, Verifier,
};

fn generation(c: &mut Criterion) {
    let h = Morphism::quaternary_squarefree();
    let g = Morphism::binary_coding();
    let mut group = c.benchmark_group("generate");
    for n in [10_000usize, 100_000] {
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("g-of-h", n), &n, |b, &n| {
            b.iter(|| mapped_stream_prefix(&g, &h, 0, n).unwrap());
        });
    }
    group.finish();
}

fn detection(c: &mut Criterion) {
    let h = Morphism::quaternary_squarefree();
    let g = Morphism::binary_coding();
    let mut group = c.benchmark_group("detect");
    for n in [1_000usize, 10_000] {
        let w = mapped_stream_prefix(&g, &h, 0, n).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("long-squares", n), &w, |b, w| {
            b.iter(|| find_squares(w, 4, None));
        });
        group.bench_with_input(BenchmarkId::new("cubefree", n), &w, |b, w| {
            b.iter(|| is_cubefree(w));
        });
        group.bench_with_input(BenchmarkId::new("max-square-root", n), &w, |b, w| {
            b.iter(|| max_square_root(w));
        });
    }
    group.finish();
}

fn avoidance_tree(c: &mut Criterion) {
    let p = AvoidancePredicate::new(2).unwrap().forbid_cubes().forbid_squares_from(3);
    c.bench_function("search/cubes+squares>=3", |b| {
        b.iter(|| search(&p, Some(0), 40).unwrap());
    });
    let p = AvoidancePredicate::new(2).unwrap().forbid_cubes().forbid_squares_from(4);
    c.bench_function("search/cubes+squares>=4 cap 40", |b| {
        b.iter(|| search(&p, Some(0), 40).unwrap());
    });
}

fn verification(c: &mut Criterion) {
    let verifier = Verifier::standard();
    c.bench_function("verify/run_all", |b| b.iter(|| verifier.run_all()));
}

criterion::criterion_group!(benches, generation, detection, avoidance_tree, verification);
criterion::criterion_main!(benches);
