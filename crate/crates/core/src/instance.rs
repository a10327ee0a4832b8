//! Problem instances.

use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;

/// Which edge modification is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// Add at most `k` edges.
    Completion,
    /// Delete at most `k` edges.
    Deletion,
}

impl Problem {
    pub const ALL: [Problem; 2] = [Problem::Completion, Problem::Deletion];

    pub fn as_str(self) -> &'static str {
        match self {
            Problem::Completion => "completion",
            Problem::Deletion => "deletion",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "completion" => Ok(Problem::Completion),
            "deletion" => Ok(Problem::Deletion),
            other => Err(format!("unknown problem `{other}` (expected completion or deletion)")),
        }
    }
}

/// A graph, a budget and the problem it is posed for.
///
/// The budget is signed: reduction rules may overdraw it, and drivers turn a
/// negative budget into a trivial no-instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub graph: Graph,
    pub k: i64,
    pub problem: Problem,
}

impl Instance {
    pub fn new(graph: Graph, k: i64, problem: Problem) -> Self {
        Self { graph, k, problem }
    }

    /// The canonical no-instance: a single paw with budget zero.
    pub fn trivial_no(problem: Problem) -> Self {
        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]);
        Self::new(paw, 0, problem)
    }

    /// The canonical yes-instance: the empty graph with the residual budget.
    pub fn trivial_yes(k: i64, problem: Problem) -> Self {
        Self::new(Graph::new(0), k.max(0), problem)
    }
}
