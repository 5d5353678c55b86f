use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sqrect::closure::{find_exceptions, SeedSet};
use sqrect::construct::construct;
use sqrect::search::{build_table, find_tiling, SearchConfig};
use sqrect::tiling::{verify, Rect};

fn bench_search(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let mut group = c.benchmark_group("find_tiling");
    for (m, n) in [(5, 6), (11, 13), (7, 11), (17, 19)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{m}x{n}")),
            &(m, n),
            |b, &(m, n)| b.iter(|| find_tiling(Rect::new(m, n), &cfg)),
        );
    }
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    c.bench_function("build_table_13", |b| b.iter(|| build_table(13, &cfg)));
}

fn bench_construct(c: &mut Criterion) {
    c.bench_function("construct_1001x1002", |b| {
        b.iter(|| construct(1001, 1002).unwrap().unwrap())
    });
    c.bench_function("verify_1001x1002", |b| {
        let t = construct(1001, 1002).unwrap().unwrap();
        b.iter(|| verify(&t, 2))
    });
}

fn bench_closure(c: &mut Criterion) {
    c.bench_function("find_exceptions_13", |b| {
        b.iter(|| find_exceptions(13, &SeedSet::default()))
    });
}

criterion_group!(benches, bench_search, bench_table, bench_construct, bench_closure);
criterion_main!(benches);
