//! Fixed workloads shared by the benchmarks.

use pawfree::{generate_random_instance, Instance, PlantedSpec, Problem};

/// Seeded instances of growing size for `problem`.
pub fn workload(problem: Problem, sizes: &[usize], k: i64) -> Vec<Instance> {
    sizes
        .iter()
        .map(|&n| {
            let spec: PlantedSpec = format!("cm:3x{},tone:{}x1,pendants:2", n / 8, n / 4)
                .parse()
                .expect("well-formed spec");
            generate_random_instance(n as u64, n, 0.05, k, problem, Some(&spec)).expect("fits")
        })
        .collect()
}
