use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lincolor::batch::color_batch;
use lincolor::bench::bench_instance;
use lincolor::{Class, Exec, MutableGraph};
use std::hint::black_box;

fn batch(c: &mut Criterion) {
    for class in [Class::ThreeDeg, Class::TwoDegDense, Class::P2Tree] {
        let graphs: Vec<MutableGraph> =
            (0..64).map(|seed| bench_instance(class, 2000, seed).expect("bench instance")).collect();
        let mut group = c.benchmark_group(format!("batch/{class}"));
        group.throughput(Throughput::Elements(graphs.len() as u64));
        group.sample_size(20);
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &graphs, |b, gs| {
                b.iter(|| {
                    let out = color_batch(exec, black_box(gs), class, None);
                    assert!(out.iter().all(Result::is_ok));
                    out
                })
            });
        }
        group.finish();
    }
}

criterion_group!(benches, batch);
criterion_main!(benches);
