use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use p5mwc::bench::{oracle_batch, solve_batch};
use p5mwc::recognition::{find_induced_with, is_prime_with};
use p5mwc::{generate, Graph, Parallelism, Pattern};

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

/// Class members contain no P5, so the search visits every branch.
fn search_input(n: usize) -> Graph {
    generate(n, 1, 7).unwrap().into_parts().0
}

fn recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_induced_p5");
    for n in [60, 120] {
        let g = search_input(n);
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| find_induced_with(black_box(g), Pattern::P5, mode))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("is_prime");
    let prime = p5mwc::generate::prime_bank()
        .iter()
        .max_by_key(|g| g.n())
        .unwrap()
        .clone();
    let g = search_input(40);
    for (label, graph) in [("bank", &prime), ("generated40", &g)] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, label), graph, |b, g| {
                b.iter(|| is_prime_with(black_box(g), mode))
            });
        }
    }
    group.finish();
}

fn batches(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_batch");
    group.sample_size(20);
    let instances: Vec<_> = (0..32).map(|s| generate(100, 10, s).unwrap()).collect();
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| solve_batch(black_box(&instances), 0, mode))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("oracle_batch");
    group.sample_size(20);
    let small: Vec<_> = (0..32).map(|s| generate(12, 3, s).unwrap()).collect();
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| oracle_batch(black_box(&small), mode)));
    }
    group.finish();
}

criterion_group!(benches, recognition, batches);
criterion_main!(benches);
