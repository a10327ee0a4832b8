use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pawfree::{kernelize_completion, kernelize_deletion, solve_exact, Instance, Problem};
use pawfree_bench::workload;

const SIZES: [usize; 3] = [16, 32, 64];

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernelize");
    for problem in Problem::ALL {
        for inst in workload(problem, &SIZES, 3) {
            group.bench_with_input(
                BenchmarkId::new(problem.as_str(), inst.graph.n()),
                &inst,
                |b, inst| {
                    b.iter(|| match problem {
                        Problem::Completion => kernelize_completion(inst),
                        Problem::Deletion => kernelize_deletion(inst),
                    })
                },
            );
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_exact");
    for problem in Problem::ALL {
        let inst: Instance = workload(problem, &[16], 3).remove(0);
        group.bench_function(problem.as_str(), |b| b.iter(|| solve_exact(&inst)));
    }
    group.finish();
}

criterion_group!(benches, kernels, oracle);
criterion_main!(benches);
