//! Linear-vertex kernel for paw-free completion.
//!
//! After paw-free components are dropped, every remaining component must
//! become complete multipartite. The modulator bounds the vertices around
//! it, type-II components are charged to the budget directly, and a single
//! type-I or complete multipartite component per graph component is either
//! expensive (some reducibility condition holds) or can be folded away.

use crate::decomposition::{classify_components, ComponentClass, ComponentKind, Modulator, ModulatorWitness};
use crate::error::{DecompositionError, RuleError};
use crate::graph::{missing_edges_between, vertex_set, Edge, Graph, VertexSet};
use crate::instance::{Instance, Problem};
use crate::report::{
    Certificate, CompletionCertificate, Decision, InstanceSize, KernelReport, Outcome, Rule, RuleCounts,
};
pub use crate::reduction::{rule_drop_paw_free_components, RuleApplication};
use crate::structure::enumerate_paws;

/// Greedy modulator for completion.
///
/// Paws are scanned in enumeration order. A paw sharing at most one vertex
/// with every selected paw is selected whole; otherwise only its pendant
/// joins. Then, per component, the first vertex isolated in `G' - M` that
/// dominates every edge of `G'` frees one endpoint of the smallest edge in
/// its neighbourhood.
pub fn build_completion_modulator(g: &Graph) -> Modulator {
    let mut selected = Vec::new();
    let mut m = g.empty_set();
    for paw in enumerate_paws(g) {
        if selected.iter().all(|q| paw.common_vertices(q) <= 1) {
            for v in paw.vertices() {
                m.insert(v);
            }
            selected.push(paw);
        } else {
            m.insert(paw.pendant);
        }
    }

    let step_one = m.clone();
    for comp in g.components() {
        let comp_set = vertex_set(g.n(), comp.iter().copied());
        let dominating = comp.iter().copied().find(|&v| {
            if step_one.contains(v) || !g.neighbors(v).is_subset(&step_one) {
                return false;
            }
            let mut undominated = comp_set.clone();
            undominated.difference_with(g.neighbors(v));
            !g.has_edge_within(&undominated)
        });
        if let Some(v) = dominating {
            let nv = g.neighbors(v);
            let smallest = nv
                .ones()
                .find_map(|u| g.neighbors(u).intersection(nv).find(|&w| w > u).map(|_| u));
            if let Some(u) = smallest {
                m.set(u, false);
            }
        }
    }

    Modulator {
        vertices: m,
        witness: ModulatorWitness::SelectedPaws(selected),
    }
}

fn missing_count(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    a.count_ones(..) * b.count_ones(..) - g.edges_between(a, b)
}

fn outside_closed_neighborhood(g: &Graph, region: &VertexSet, set: &VertexSet) -> VertexSet {
    let mut out = region.clone();
    out.difference_with(&g.set_closed_neighbors(set));
    out
}

/// The six expense conditions of a type-I component; the component is
/// reducible when none holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToneReducibility {
    /// `|L| ≤ 4|M'|`.
    pub left_small: bool,
    /// `G' - N[L]` has an edge.
    pub edge_beyond_left: bool,
    /// `V(G') ≠ N[C]` and `|L| ≤ 2|R|`.
    pub undominated_balanced: bool,
    /// At least `|L|/2` missing edges between `L` and `N(L)`.
    pub left_missing: bool,
    /// `|L| ≤ |R| + |M'|` and `G' - N[R]` has an edge.
    pub edge_beyond_right: bool,
    /// `|L| ≤ |R| + |M'|` and at least `|R|/2` missing edges between `R` and `N(R)`.
    pub right_missing: bool,
    pub reducible: bool,
}

impl ToneReducibility {
    pub fn conditions(&self) -> [bool; 6] {
        [
            self.left_small,
            self.edge_beyond_left,
            self.undominated_balanced,
            self.left_missing,
            self.edge_beyond_right,
            self.right_missing,
        ]
    }
}

/// Evaluates the type-I conditions for `cls` inside the graph component
/// `region` with local modulator `m_local = M ∩ region`.
pub fn tone_reducibility(
    g: &Graph,
    region: &VertexSet,
    m_local: &VertexSet,
    cls: &ComponentClass,
) -> ToneReducibility {
    let (left, right) = cls.bipartition().expect("type-I component");
    let n = g.n();
    let l = vertex_set(n, left.iter().copied());
    let r = vertex_set(n, right.iter().copied());
    let c = cls.vertex_set(n);
    let (nl_len, nr_len, m_len) = (left.len(), right.len(), m_local.count_ones(..));

    let left_small = nl_len <= 4 * m_len;
    let edge_beyond_left = g.has_edge_within(&outside_closed_neighborhood(g, region, &l));
    let undominated_balanced = g.set_closed_neighbors(&c) != *region && nl_len <= 2 * nr_len;
    let left_missing = 2 * missing_count(g, &l, &g.set_neighbors(&l)) >= nl_len;
    let tight = nl_len <= nr_len + m_len;
    let edge_beyond_right = tight && g.has_edge_within(&outside_closed_neighborhood(g, region, &r));
    let right_missing = tight && 2 * missing_count(g, &r, &g.set_neighbors(&r)) >= nr_len;

    let mut red = ToneReducibility {
        left_small,
        edge_beyond_left,
        undominated_balanced,
        left_missing,
        edge_beyond_right,
        right_missing,
        reducible: false,
    };
    red.reducible = !red.conditions().iter().any(|&b| b);
    red
}

/// Adds all missing edges from `L ∪ X` to `N(L)`, where `X = V(G') \ N[L]`,
/// charges them to the budget and deletes all of `L ∪ X` except its
/// smallest vertex.
pub fn apply_rule_tone(
    instance: &Instance,
    region: &VertexSet,
    cls: &ComponentClass,
) -> Result<RuleApplication, RuleError> {
    let g = &instance.graph;
    let (left, _) = cls.bipartition().expect("type-I component");
    let l = vertex_set(g.n(), left.iter().copied());
    let nl = g.set_neighbors(&l);
    let x = outside_closed_neighborhood(g, region, &l);
    let mut added = missing_edges_between(g, &l, &nl);
    added.extend(missing_edges_between(g, &x, &nl));
    added.sort_unstable();

    let mut folded = l;
    folded.union_with(&x);
    if let Some(keep) = folded.minimum() {
        folded.set(keep, false);
    }
    fold(instance, added, &folded)
}

fn fold(instance: &Instance, added: Vec<Edge>, remove: &VertexSet) -> Result<RuleApplication, RuleError> {
    if added.len() as i64 > instance.k {
        return Err(RuleError::BudgetExhausted {
            needed: added.len(),
            available: instance.k,
        });
    }
    let (with_added, count) = instance.graph.with_edges_added(added.iter().copied());
    debug_assert_eq!(count, added.len());
    let (graph, map) = with_added.remove_vertices(remove);
    Ok(RuleApplication {
        instance: Instance::new(graph, instance.k - added.len() as i64, instance.problem),
        added,
        removed: remove.ones().collect(),
        map,
    })
}

/// The five expense conditions of a complete multipartite component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReducibility {
    /// `|C| ≤ 3|M'|`.
    pub small: bool,
    /// `G' - N[C]` has an edge.
    pub edge_beyond: bool,
    /// `|P*| > 2|C|/3` and `G' - N[P*]` has an edge.
    pub big_part_edge_beyond: bool,
    /// `|P*| ≤ 2|C|/3` and `V(G') ≠ N[C]`.
    pub undominated: bool,
    /// `|P*| ≤ 2|C|/3`, `V(G') = N[C]`, and every part is expensive.
    pub every_part_expensive: bool,
    pub reducible: bool,
    /// Index of the largest part `P*` (ties: smallest minimum id).
    pub largest_part: usize,
    /// Index of the part folded in the balanced case.
    pub chosen_part: Option<usize>,
}

impl CmReducibility {
    pub fn conditions(&self) -> [bool; 5] {
        [
            self.small,
            self.edge_beyond,
            self.big_part_edge_beyond,
            self.undominated,
            self.every_part_expensive,
        ]
    }

    /// Whether the largest part holds more than two thirds of the component.
    pub fn dominant_part(&self, cls: &ComponentClass) -> bool {
        let parts = cls.parts().expect("multipartite component");
        3 * parts[self.largest_part].len() > 2 * cls.len()
    }
}

pub fn cm_reducibility(
    g: &Graph,
    region: &VertexSet,
    m_local: &VertexSet,
    cls: &ComponentClass,
) -> CmReducibility {
    let parts = cls.parts().expect("multipartite component");
    let n = g.n();
    let c = cls.vertex_set(n);
    let largest_part = parts
        .iter()
        .enumerate()
        .fold(0, |best, (i, p)| if p.len() > parts[best].len() { i } else { best });
    let p_star = vertex_set(n, parts[largest_part].iter().copied());
    let dominant = 3 * parts[largest_part].len() > 2 * cls.len();
    let dominated = g.set_closed_neighbors(&c) == *region;

    // A part is cheap when `G' - N[P]` is independent and fewer than `|P|`
    // edges are missing between it and `N(P)`.
    let cheap = |part: &Vec<usize>| {
        let p = vertex_set(n, part.iter().copied());
        let x = outside_closed_neighborhood(g, region, &p);
        !g.has_edge_within(&x) && missing_count(g, &x, &g.set_neighbors(&p)) < part.len()
    };

    let small = cls.len() <= 3 * m_local.count_ones(..);
    let edge_beyond = g.has_edge_within(&outside_closed_neighborhood(g, region, &c));
    let big_part_edge_beyond = dominant && g.has_edge_within(&outside_closed_neighborhood(g, region, &p_star));
    let undominated = !dominant && !dominated;
    let every_part_expensive = !dominant && dominated && !parts.iter().any(cheap);

    let reducible = !(small || edge_beyond || big_part_edge_beyond || undominated || every_part_expensive);
    let chosen_part = if reducible && !dominant {
        parts.iter().position(cheap)
    } else {
        None
    };
    CmReducibility {
        small,
        edge_beyond,
        big_part_edge_beyond,
        undominated,
        every_part_expensive,
        reducible,
        largest_part,
        chosen_part,
    }
}

/// Folds the largest part (or, in the balanced case, the chosen part) `P`
/// together with `X = V(G') \ N[P]`: all missing edges between `X` and `N(P)`
/// are added and `P ∪ X` is deleted.
pub fn apply_rule_cm(
    instance: &Instance,
    region: &VertexSet,
    cls: &ComponentClass,
    red: &CmReducibility,
) -> Result<RuleApplication, RuleError> {
    let g = &instance.graph;
    let parts = cls.parts().expect("multipartite component");
    let index = if red.dominant_part(cls) {
        red.largest_part
    } else {
        red.chosen_part.expect("reducible balanced component has a chosen part")
    };
    let p = vertex_set(g.n(), parts[index].iter().copied());
    let x = outside_closed_neighborhood(g, region, &p);
    let added = missing_edges_between(g, &x, &g.set_neighbors(&p));
    let mut remove = p;
    remove.union_with(&x);
    fold(instance, added, &remove)
}

/// Runs the completion kernel to a fixed point.
pub fn kernelize_completion(instance: &Instance) -> Result<KernelReport, DecompositionError> {
    assert_eq!(instance.problem, Problem::Completion, "completion kernel on a deletion instance");
    let original = InstanceSize::of(instance);
    let mut current = instance.clone();
    let mut firings = RuleCounts::default();
    let mut cert = CompletionCertificate::default();

    let finish = |current: Instance, outcome: Outcome, decision, firings, mut cert: CompletionCertificate| {
        let kernel = match outcome {
            Outcome::Reduced => current.clone(),
            Outcome::TrivialYes => Instance::trivial_yes(current.k, Problem::Completion),
            Outcome::TrivialNo => Instance::trivial_no(Problem::Completion),
        };
        cert.vertex_cap = 38 * kernel.k;
        Ok(KernelReport {
            problem: Problem::Completion,
            outcome,
            decision,
            original,
            budget_consumed: original.k - current.k,
            kernel,
            firings,
            certificate: Certificate::Completion(cert),
        })
    };

    'restart: loop {
        if current.k < 0 {
            return finish(current, Outcome::TrivialNo, Some(Decision::NegativeBudget), firings, cert);
        }
        let (graph, _) = rule_drop_paw_free_components(&current.graph);
        if graph.n() < current.graph.n() {
            firings.record(Rule::PawFreeComponents);
            current.graph = graph;
        }
        if current.graph.is_empty() {
            return finish(
                current,
                Outcome::TrivialYes,
                Some(Decision::EmptyAfterPawFreeRemoval),
                firings,
                cert,
            );
        }

        let g = &current.graph;
        let modulator = build_completion_modulator(g);
        cert.modulator_size = Some(modulator.len());
        cert.modulator_cap = Some(4 * current.k);
        if modulator.len() as i64 > 4 * current.k {
            return finish(current, Outcome::TrivialNo, Some(Decision::ModulatorTooLarge), firings, cert);
        }

        let classes = classify_components(g, &modulator.vertices)?;
        let type_two: usize = classes.iter().filter(|c| c.is_type_two()).map(|c| c.len()).sum();
        cert.type_two_vertices = Some(type_two);
        cert.type_two_cap = Some(2 * current.k);
        if type_two as i64 > 2 * current.k {
            return finish(current, Outcome::TrivialNo, Some(Decision::TypeTwoTooLarge), firings, cert);
        }

        let components = g.components();
        let mut component_of = vec![0; g.n()];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = i;
            }
        }
        for (i, comp) in components.iter().enumerate() {
            let mut others = classes
                .iter()
                .filter(|c| component_of[c.vertices[0]] == i && !c.is_type_two());
            let (Some(cls), None) = (others.next(), others.next()) else {
                continue;
            };
            let region = vertex_set(g.n(), comp.iter().copied());
            let mut m_local = modulator.vertices.clone();
            m_local.intersect_with(&region);

            let applied = match cls.kind {
                ComponentKind::TypeOne { .. } => {
                    if !tone_reducibility(g, &region, &m_local, cls).reducible {
                        continue;
                    }
                    firings.record(Rule::TypeOneComponent);
                    apply_rule_tone(&current, &region, cls)
                }
                ComponentKind::CompleteMultipartite { .. } => {
                    let red = cm_reducibility(g, &region, &m_local, cls);
                    if !red.reducible {
                        continue;
                    }
                    firings.record(Rule::MultipartiteComponent);
                    apply_rule_cm(&current, &region, cls, &red)
                }
                ComponentKind::TypeTwo => unreachable!("filtered above"),
            };
            match applied {
                Ok(next) => {
                    current = next.instance;
                    continue 'restart;
                }
                Err(RuleError::BudgetExhausted { .. }) => {
                    return finish(current, Outcome::TrivialNo, Some(Decision::BudgetExhausted), firings, cert);
                }
                Err(RuleError::Decomposition(e)) => return Err(e),
            }
        }

        if current.graph.n() as i64 <= 38 * current.k {
            return finish(current, Outcome::Reduced, None, firings, cert);
        }
        return finish(current, Outcome::TrivialNo, Some(Decision::VertexCapExceeded), firings, cert);
    }
}
