//! Exact solvers used as ground truth.
//!
//! An induced paw on a vertex set `S` can only be destroyed by changing an
//! adjacency inside `S`. Completion may only add, so it branches over the two
//! missing pairs of the paw; deletion branches over its four edges. The
//! asymmetric branching factors (2 against 4) are deliberate.

use crate::error::OracleError;
use crate::graph::{Edge, Graph};
use crate::instance::{Instance, Problem};
use crate::structure::{first_paw, is_paw_free};

/// Default cap on the number of subsets [`solve_by_enumeration`] inspects.
pub const DEFAULT_ENUMERATION_CAP: u128 = 50_000_000;

/// Edges to add (completion) or delete (deletion), in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    pub problem: Problem,
    pub edges: Vec<Edge>,
}

impl Solution {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The graph after applying the modification.
    pub fn apply(&self, g: &Graph) -> Graph {
        match self.problem {
            Problem::Completion => g.with_edges_added(self.edges.iter().copied()).0,
            Problem::Deletion => g.with_edges_removed(self.edges.iter().copied()).0,
        }
    }

    /// Whether the edges are valid modifications of `g` and leave it
    /// paw-free.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let wanted = self.problem == Problem::Deletion;
        self.edges.iter().all(|&(u, v)| u != v && v < g.n() && g.has_edge(u, v) == wanted)
            && is_paw_free(&self.apply(g))
    }
}

fn branch(g: &mut Graph, problem: Problem, budget: i64, chosen: &mut Vec<Edge>) -> bool {
    let Some(paw) = first_paw(g) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let options: Vec<Edge> = match problem {
        Problem::Completion => paw.missing_pairs().to_vec(),
        Problem::Deletion => paw.edges().to_vec(),
    };
    for (u, v) in options {
        match problem {
            Problem::Completion => g.insert_edge(u, v),
            Problem::Deletion => g.delete_edge(u, v),
        };
        chosen.push((u, v));
        if branch(g, problem, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
        match problem {
            Problem::Completion => g.delete_edge(u, v),
            Problem::Deletion => g.insert_edge(u, v),
        };
    }
    false
}

/// A solution with at most `k` edges, if one exists. Negative budgets have
/// none.
pub fn solve_exact(instance: &Instance) -> Option<Solution> {
    if instance.k < 0 {
        return None;
    }
    let mut g = instance.graph.clone();
    let mut edges = Vec::new();
    branch(&mut g, instance.problem, instance.k, &mut edges).then(|| {
        edges.sort_unstable();
        Solution {
            problem: instance.problem,
            edges,
        }
    })
}

/// A minimum solution, found by iterative deepening; the budget of
/// `instance` is ignored.
pub fn minimum_solution(instance: &Instance) -> Solution {
    (0..)
        .find_map(|k| solve_exact(&Instance::new(instance.graph.clone(), k, instance.problem)))
        .expect("every graph can be made complete or edgeless")
}

fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exhaustive search over all candidate subsets of size at most `k`,
/// smallest first, with [`DEFAULT_ENUMERATION_CAP`].
pub fn solve_by_enumeration(instance: &Instance) -> Result<Option<Solution>, OracleError> {
    solve_by_enumeration_capped(instance, DEFAULT_ENUMERATION_CAP)
}

pub fn solve_by_enumeration_capped(instance: &Instance, cap: u128) -> Result<Option<Solution>, OracleError> {
    if instance.k < 0 {
        return Err(OracleError::NegativeBudget(instance.k));
    }
    let g = &instance.graph;
    let candidates: Vec<Edge> = match instance.problem {
        Problem::Deletion => g.edges().collect(),
        Problem::Completion => (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect(),
    };
    let c = candidates.len() as u128;
    let k = (instance.k as u128).min(c);
    let subsets: u128 = (0..=k).map(|r| binomial(c, r)).sum();
    if subsets > cap {
        return Err(OracleError::CapExceeded { subsets, cap });
    }
    for size in 0..=k as usize {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let solution = Solution {
                problem: instance.problem,
                edges: idx.iter().map(|&i| candidates[i]).collect(),
            };
            if is_paw_free(&solution.apply(g)) {
                return Ok(Some(solution));
            }
            let Some(pos) = (0..size).rev().find(|&i| idx[i] < candidates.len() - size + i) else {
                break;
            };
            idx[pos] += 1;
            for i in pos + 1..size {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }
    Ok(None)
}
