use proptest::prelude::*;

use pawfree::oracle::solve_by_enumeration_capped;
use pawfree::{
    build_completion_modulator, build_paw_packing, classify_components, enumerate_paws, false_twin_classes, kernelize,
    parse_instance, solve_exact, verify_modulator, write_instance, Graph, Instance, Outcome, Problem,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

fn problem() -> impl Strategy<Value = Problem> {
    prop_oneof![Just(Problem::Completion), Just(Problem::Deletion)]
}

fn instance(max_n: usize, max_k: i64) -> impl Strategy<Value = Instance> {
    (graph(max_n), 0..=max_k, problem()).prop_map(|(g, k, p)| Instance::new(g, k, p))
}

fn brute_force_paws(g: &Graph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let vs = [a, b, c, d];
                    let mut degrees = [0; 4];
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(vs[i], vs[j]) {
                                degrees[i] += 1;
                                degrees[j] += 1;
                            }
                        }
                    }
                    degrees.sort_unstable();
                    count += usize::from(degrees == [1, 2, 2, 3]);
                }
            }
        }
    }
    count
}

proptest! {
    #[test]
    fn paw_enumeration_matches_four_subset_scan(g in graph(10)) {
        let paws = enumerate_paws(&g);
        prop_assert_eq!(paws.len(), brute_force_paws(&g));
        prop_assert_eq!(pawfree::is_paw_free(&g), paws.is_empty());
    }

    #[test]
    fn instance_text_round_trips(inst in instance(12, 6)) {
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(write_instance(&back), text);
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn completion_modulator_is_valid(g in graph(12)) {
        let m = build_completion_modulator(&g);
        prop_assert!(verify_modulator(&g, &m.vertices));
        prop_assert!(classify_components(&g, &m.vertices).is_ok());
    }

    #[test]
    fn packing_is_edge_disjoint_maximal_and_a_modulator(g in graph(12)) {
        let packing = build_paw_packing(&g);
        for (i, a) in packing.paws.iter().enumerate() {
            for b in &packing.paws[i + 1..] {
                prop_assert_eq!(a.common_edges(b), 0);
            }
        }
        for paw in enumerate_paws(&g) {
            prop_assert!(packing.paws.iter().any(|p| p.common_edges(&paw) > 0));
        }
        let m = packing.modulator(g.n());
        prop_assert!(verify_modulator(&g, &m.vertices));
        prop_assert!(classify_components(&g, &m.vertices).is_ok());
    }

    #[test]
    fn kernels_never_grow(inst in instance(12, 5)) {
        let report = kernelize(&inst).unwrap();
        prop_assert!(report.kernel.graph.n() <= inst.graph.n().max(4));
        if report.outcome == Outcome::Reduced {
            prop_assert!(report.kernel.graph.n() <= inst.graph.n());
            prop_assert!(report.kernel.k <= inst.k);
            prop_assert_eq!(report.budget_consumed, inst.k - report.kernel.k);
        }
    }

    #[test]
    fn kernels_agree_with_the_oracle(inst in instance(9, 3)) {
        let report = kernelize(&inst).unwrap();
        prop_assert!(pawfree::harness::check_against_oracle(&inst, &report).is_ok());
    }

    #[test]
    fn oracle_solutions_are_valid_and_agree(inst in instance(7, 3)) {
        let exact = solve_exact(&inst);
        let enumerated = solve_by_enumeration_capped(&inst, 50_000_000).unwrap();
        prop_assert_eq!(exact.is_some(), enumerated.is_some());
        for s in exact.iter().chain(enumerated.iter()) {
            prop_assert!(s.is_valid_for(&inst.graph));
            prop_assert!(s.size() as i64 <= inst.k);
            prop_assert_eq!(s.problem, inst.problem);
        }
    }

    #[test]
    fn false_twin_classes_partition_the_vertices(g in graph(12)) {
        let classes = false_twin_classes(&g);
        let mut seen: Vec<usize> = classes.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
        for class in &classes {
            for &v in &class[1..] {
                prop_assert_eq!(g.neighbors(v), g.neighbors(class[0]));
            }
        }
    }
}
