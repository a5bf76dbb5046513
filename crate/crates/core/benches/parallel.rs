use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ugb_core::graver::{enumerate_walk_binomials_with, graver_basis_with};
use ugb_core::ugb::universal_groebner_basis_with;
use ugb_core::{families, EnumerationLimits, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_graver(c: &mut Criterion) {
    let mut group = c.benchmark_group("graver_basis");
    group.sample_size(10);
    let graphs = [
        ("K6", families::complete(6)),
        ("triforce", families::triforce()),
        ("random_9_14", families::random_connected(9, 14, 3)),
    ];
    for (name, g) in &graphs {
        let limits = EnumerationLimits::for_graph(g);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), g, |b, g| {
                b.iter(|| graver_basis_with(black_box(g), &limits, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_walk_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("walk_binomials");
    group.sample_size(10);
    let g = families::random_connected(9, 13, 11);
    let limits = EnumerationLimits::for_graph(&g);
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| {
            b.iter(|| enumerate_walk_binomials_with(black_box(&g), &limits, exec).unwrap())
        });
    }
    group.finish();
}

fn bench_filter(c: &mut Criterion) {
    let mut group = c.benchmark_group("ugb_filter");
    let g = families::complete(7);
    let basis =
        graver_basis_with(&g, &EnumerationLimits::for_graph(&g), Execution::default()).unwrap();
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, format!("K7_{}", basis.len())), |b| {
            b.iter(|| universal_groebner_basis_with(black_box(&basis), &g, false, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_graver, bench_walk_search, bench_filter);
criterion_main!(benches);
