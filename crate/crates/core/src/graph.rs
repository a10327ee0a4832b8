//! Simple undirected graphs over the dense id space `0..n`.
//!
//! Adjacency is a bitset per vertex, so neighbourhood intersections (the
//! inner loop of triangle and paw detection) are word-parallel. Values are
//! immutable once built; every mutation returns a new graph.

use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of vertex ids of a single graph.
pub type VertexSet = FixedBitSet;

/// An unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);

/// Normalizes a pair so the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Builds a [`VertexSet`] over a universe of `n` vertices.
pub fn vertex_set<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> VertexSet {
    let mut set = VertexSet::with_capacity(n);
    for v in vertices {
        set.insert(v);
    }
    set
}

/// Simple undirected graph (no loops, no parallel edges).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Maps vertices of a graph produced by [`Graph::remove_vertices`] back to
/// the graph they were taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    /// `origin[new] = old`.
    pub origin: Vec<usize>,
    /// `image[old] = Some(new)` for surviving vertices.
    pub image: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self {
            origin: (0..n).collect(),
            image: (0..n).map(Some).collect(),
        }
    }

    /// Composes `self` (old → mid) with `next` (mid → new).
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        let origin = next.origin.iter().map(|&mid| self.origin[mid]).collect();
        let image = self
            .image
            .iter()
            .map(|mid| mid.and_then(|mid| next.image[mid]))
            .collect();
        VertexMap { origin, image }
    }

    /// Images of the given old vertices that survived, in ascending order.
    pub fn map_vertices(&self, old: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = old.into_iter().filter_map(|v| self.image[v]).collect();
        out.sort_unstable();
        out
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(),
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Loops and repeated pairs are
    /// ignored; ids must be below `n`.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.insert_edge(u, v);
        }
        g
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n(), "vertex out of range");
        if u == v || self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.m -= 1;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The empty vertex set over this graph's universe.
    pub fn empty_set(&self) -> VertexSet {
        VertexSet::with_capacity(self.n())
    }

    /// All vertices as a set.
    pub fn full_set(&self) -> VertexSet {
        let mut set = self.empty_set();
        set.insert_range(..);
        set
    }

    /// Open neighbourhood of a vertex set: `N(X) = N[X] \ X`.
    pub fn set_neighbors(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.ones() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Closed neighbourhood of a vertex set: `N[X] = X ∪ N(X)`.
    pub fn set_closed_neighbors(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.ones() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Whether the subgraph induced by `within` has at least one edge.
    pub fn has_edge_within(&self, within: &VertexSet) -> bool {
        within
            .ones()
            .any(|v| self.adj[v].intersection(within).next().is_some())
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.ones().map(|u| self.adj[u].intersection_count(b)).sum()
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.full_set())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in within.ones() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.adj[v].intersection(within) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Returns a copy with the given pairs added. Pairs already present are
    /// skipped; the second value counts the edges actually added.
    pub fn with_edges_added<I: IntoIterator<Item = Edge>>(&self, edges: I) -> (Graph, usize) {
        let mut g = self.clone();
        let added = edges
            .into_iter()
            .filter(|&(u, v)| g.insert_edge(u, v))
            .count();
        (g, added)
    }

    /// Returns a copy with the given edges removed. Absent pairs are skipped.
    pub fn with_edges_removed<I: IntoIterator<Item = Edge>>(&self, edges: I) -> (Graph, usize) {
        let mut g = self.clone();
        let removed = edges
            .into_iter()
            .filter(|&(u, v)| g.delete_edge(u, v))
            .count();
        (g, removed)
    }

    /// Deletes a vertex set, compacting the survivors onto `0..n'` while
    /// preserving their relative order.
    pub fn remove_vertices(&self, remove: &VertexSet) -> (Graph, VertexMap) {
        let mut keep = self.full_set();
        keep.difference_with(remove);
        self.induced_subgraph(&keep)
    }

    /// The subgraph induced by `keep`, compacted onto `0..|keep|`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, VertexMap) {
        let origin: Vec<usize> = keep.ones().filter(|&v| v < self.n()).collect();
        let mut image = vec![None; self.n()];
        for (new, &old) in origin.iter().enumerate() {
            image[old] = Some(new);
        }
        let mut g = Graph::new(origin.len());
        for (new_u, &old_u) in origin.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep) {
                if old_v > old_u {
                    g.insert_edge(new_u, image[old_v].expect("kept vertex"));
                }
            }
        }
        (g, VertexMap { origin, image })
    }

    /// Disjoint union: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.n(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// All pairs `(a, b)`, `a ∈ A`, `b ∈ B`, that are not edges of `g`.
/// The sets must be disjoint.
pub fn missing_edges_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in a.ones() {
        for v in b.ones() {
            if !g.has_edge(u, v) {
                out.push(edge(u, v));
            }
        }
    }
    out.sort_unstable();
    out
}
