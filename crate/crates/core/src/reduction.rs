//! Pieces shared by both kernels.

use crate::graph::{vertex_set, Edge, Graph, VertexMap};
use crate::instance::Instance;
use crate::structure::is_paw_free;

/// The result of applying a rule that adds edges and deletes vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub instance: Instance,
    /// Edges added, in ids of the input graph.
    pub added: Vec<Edge>,
    /// Vertices deleted, in ids of the input graph.
    pub removed: Vec<usize>,
    /// Input ids of the surviving vertices.
    pub map: VertexMap,
}

/// Deletes every component that contains no induced paw.
pub fn rule_drop_paw_free_components(g: &Graph) -> (Graph, VertexMap) {
    let mut drop = g.empty_set();
    for comp in g.components() {
        let set = vertex_set(g.n(), comp.iter().copied());
        let (sub, _) = g.induced_subgraph(&set);
        if is_paw_free(&sub) {
            drop.union_with(&set);
        }
    }
    g.remove_vertices(&drop)
}
