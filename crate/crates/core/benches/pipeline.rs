use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use srgdim::{build_srg, sweep, AnalyzeOptions, CaseFilter, Execution, IntersectionGraph, RingSpec};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn distances_and_srg(c: &mut Criterion) {
    let mut group = c.benchmark_group("distances+srg");
    for ring in ["0,0,0,0,0,0,0", "3,3,1"] {
        let spec: RingSpec = ring.parse().unwrap();
        let ig = IntersectionGraph::build(&spec, 512).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, ring), &ig.graph, |b, g| {
                b.iter(|| {
                    let dist = g.all_pairs_distances(exec);
                    black_box(build_srg(g, &dist, exec))
                })
            });
        }
    }
    group.finish();
}

fn sweep_64(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = AnalyzeOptions {
            execution: exec,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::new(name, 64), |b| {
            b.iter(|| black_box(sweep(64, CaseFilter::All, &opts)))
        });
    }
    group.finish();
}

criterion_group!(benches, distances_and_srg, sweep_64);
criterion_main!(benches);
