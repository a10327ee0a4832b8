//! Induced paws and the structure of paw-free graphs.
//!
//! A graph is paw-free exactly when each of its components is triangle-free
//! or complete multipartite (at least three parts). [`is_paw_free`] decides it
//! that way; the four-subset scan only exists in tests.

use std::collections::HashMap;

use crate::graph::{edge, vertex_set, Edge, Graph, VertexSet};

/// An induced paw: a triangle `{degree3, triangle[0], triangle[1]}` with
/// `pendant` attached to `degree3` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Paw {
    pub degree3: usize,
    /// The two degree-two vertices, ascending.
    pub triangle: [usize; 2],
    /// The degree-one vertex.
    pub pendant: usize,
}

impl Paw {
    pub fn new(degree3: usize, a: usize, b: usize, pendant: usize) -> Self {
        let triangle = if a < b { [a, b] } else { [b, a] };
        Self {
            degree3,
            triangle,
            pendant,
        }
    }

    /// The four vertices, ascending.
    pub fn vertices(&self) -> [usize; 4] {
        let mut vs = [self.degree3, self.triangle[0], self.triangle[1], self.pendant];
        vs.sort_unstable();
        vs
    }

    pub fn contains(&self, v: usize) -> bool {
        self.degree3 == v || self.pendant == v || self.triangle.contains(&v)
    }

    /// The four edges, normalized and ascending.
    pub fn edges(&self) -> [Edge; 4] {
        let [a, b] = self.triangle;
        let mut es = [
            edge(self.degree3, a),
            edge(self.degree3, b),
            edge(a, b),
            edge(self.degree3, self.pendant),
        ];
        es.sort_unstable();
        es
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }

    /// The two non-adjacent pairs inside the paw (pendant to each degree-two
    /// vertex). These are the only pairs a completion can add to destroy it.
    pub fn missing_pairs(&self) -> [Edge; 2] {
        [
            edge(self.pendant, self.triangle[0]),
            edge(self.pendant, self.triangle[1]),
        ]
    }

    /// Number of vertices shared with `other`.
    pub fn common_vertices(&self, other: &Paw) -> usize {
        self.vertices().iter().filter(|&&v| other.contains(v)).count()
    }

    /// Number of edges shared with `other`.
    pub fn common_edges(&self, other: &Paw) -> usize {
        let theirs = other.edges();
        self.edges().iter().filter(|e| theirs.contains(e)).count()
    }
}

/// Every induced paw of `g` exactly once, ordered by sorted vertex tuple.
///
/// Each triangle `xyz` is extended by every pendant `p ∈ N(x) \ N[y] \ N[z]`.
/// An induced paw has a unique triangle and a unique degree-three vertex, so
/// no paw is produced twice.
pub fn enumerate_paws(g: &Graph) -> Vec<Paw> {
    let mut paws = Vec::new();
    for_each_triangle(g, |tri| {
        for i in 0..3 {
            let x = tri[i];
            let y = tri[(i + 1) % 3];
            let z = tri[(i + 2) % 3];
            let mut pendants = g.neighbors(x).clone();
            pendants.difference_with(&g.closed_neighbors(y));
            pendants.difference_with(&g.closed_neighbors(z));
            paws.extend(pendants.ones().map(|p| Paw::new(x, y, z, p)));
        }
    });
    paws.sort_unstable_by_key(|p| p.vertices());
    paws
}

/// Lexicographically first induced paw, if any.
pub fn first_paw(g: &Graph) -> Option<Paw> {
    let mut best: Option<Paw> = None;
    for_each_triangle(g, |tri| {
        for i in 0..3 {
            let x = tri[i];
            let y = tri[(i + 1) % 3];
            let z = tri[(i + 2) % 3];
            let mut pendants = g.neighbors(x).clone();
            pendants.difference_with(&g.closed_neighbors(y));
            pendants.difference_with(&g.closed_neighbors(z));
            for p in pendants.ones() {
                let paw = Paw::new(x, y, z, p);
                if best.is_none_or(|b| paw.vertices() < b.vertices()) {
                    best = Some(paw);
                }
            }
        }
    });
    best
}

/// Calls `f` on every triangle `[a, b, c]` with `a < b < c`.
fn for_each_triangle(g: &Graph, mut f: impl FnMut([usize; 3])) {
    for (a, b) in g.edges() {
        for c in g.neighbors(a).intersection(g.neighbors(b)) {
            if c > b {
                f([a, b, c]);
            }
        }
    }
}

/// Whether the subgraph induced by `within` contains no triangle.
pub fn is_triangle_free_within(g: &Graph, within: &VertexSet) -> bool {
    for a in within.ones() {
        for b in g.neighbors(a).intersection(within) {
            if b > a
                && g.neighbors(a)
                    .intersection(g.neighbors(b))
                    .any(|c| within.contains(c))
            {
                return false;
            }
        }
    }
    true
}

/// Whether `g` has no induced paw, decided component by component.
pub fn is_paw_free(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let set = vertex_set(g.n(), comp.iter().copied());
        is_triangle_free_within(g, &set) || complete_multipartite_parts(g, comp).is_some()
    })
}

/// The parts of `component` if it induces a complete multipartite graph with
/// at least three parts, sorted by minimum vertex.
///
/// Non-adjacency inside the component must be an equivalence relation: every
/// vertex's closed non-neighbourhood is exactly its own class.
pub fn complete_multipartite_parts(g: &Graph, component: &[usize]) -> Option<Vec<Vec<usize>>> {
    let within = vertex_set(g.n(), component.iter().copied());
    let non_neighbors = |v: usize| {
        let mut set = within.clone();
        set.difference_with(g.neighbors(v));
        set
    };
    let mut assigned = g.empty_set();
    let mut parts = Vec::new();
    for v in within.ones() {
        if assigned.contains(v) {
            continue;
        }
        let part = non_neighbors(v);
        if part.ones().any(|u| non_neighbors(u) != part) {
            return None;
        }
        assigned.union_with(&part);
        parts.push(part.ones().collect::<Vec<_>>());
    }
    (parts.len() >= 3).then_some(parts)
}

/// The bipartition `(L, R)` of `component` if it is complete bipartite, with
/// `|L| ≥ |R|` and ties resolved towards the side holding the smallest id.
pub fn complete_bipartition(g: &Graph, component: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let &first = component.iter().min()?;
    let within = vertex_set(g.n(), component.iter().copied());
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    side[first] = Some(false);
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        let s = side[v].expect("coloured");
        for w in g.neighbors(v).intersection(&within) {
            match side[w] {
                None => {
                    side[w] = Some(!s);
                    stack.push(w);
                }
                Some(t) if t == s => return None,
                Some(_) => {}
            }
        }
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &v in component {
        match side[v] {
            Some(false) => a.push(v),
            Some(true) => b.push(v),
            None => return None, // not connected
        }
    }
    if b.is_empty() {
        return None;
    }
    let b_set = vertex_set(g.n(), b.iter().copied());
    if g.edges_between(&vertex_set(g.n(), a.iter().copied()), &b_set) != a.len() * b.len() {
        return None;
    }
    a.sort_unstable();
    b.sort_unstable();
    // `a` holds `first`, so it wins ties.
    if a.len() >= b.len() {
        Some((a, b))
    } else {
        Some((b, a))
    }
}

/// Classes of the relation `N(u) = N(v)`, sorted by minimum vertex.
pub fn false_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut index: HashMap<&VertexSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in g.vertices() {
        let next = classes.len();
        let i = *index.entry(g.neighbors(v)).or_insert(next);
        if i == next {
            classes.push(Vec::new());
        }
        classes[i].push(v);
    }
    classes
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::Graph;

    /// Triangle 0,1,2 with pendant 3 on 2.
    pub fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    }

    /// K4 on 0..4 with pendant 4 attached to 3.
    pub fn k4_pendant() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive ids.
    pub fn complete_multipartite(sizes: &[usize]) -> Graph {
        let n: usize = sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        Graph::from_edges(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part_of[u] != part_of[v]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn brute_force_paws(g: &Graph) -> usize {
        let n = g.n();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let vs = [a, b, c, d];
                        let mut degs = [0usize; 4];
                        let mut m = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if g.has_edge(vs[i], vs[j]) {
                                    degs[i] += 1;
                                    degs[j] += 1;
                                    m += 1;
                                }
                            }
                        }
                        degs.sort_unstable();
                        if m == 4 && degs == [1, 2, 2, 3] {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn the_paw_has_one_paw() {
        let paws = enumerate_paws(&paw());
        assert_eq!(paws, vec![Paw::new(2, 0, 1, 3)]);
    }

    #[test]
    fn k4_has_no_paw() {
        assert!(enumerate_paws(&Graph::complete(4)).is_empty());
    }

    #[test]
    fn k4_with_pendant_has_three_paws() {
        let g = k4_pendant();
        assert_eq!(brute_force_paws(&g), 3);
        let paws = enumerate_paws(&g);
        let sets: Vec<_> = paws.iter().map(|p| p.vertices()).collect();
        assert_eq!(sets, vec![[0, 1, 3, 4], [0, 2, 3, 4], [1, 2, 3, 4]]);
        assert!(paws.iter().all(|p| p.degree3 == 3 && p.pendant == 4));
    }

    #[test]
    fn paw_freeness_examples() {
        assert!(!is_paw_free(&paw()));
        assert!(is_paw_free(&cycle(4)));
        assert!(is_paw_free(&Graph::complete(4)));
        assert!(is_paw_free(&Graph::new(0)));
        assert!(is_paw_free(&cycle(5)));
    }

    #[test]
    fn diamond_parts() {
        // diamond: u=0, x=1, v=2, y=3; u,y nonadjacent
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]);
        // here 1 and 3 are adjacent, so the nonadjacent pair is {0, 2}
        assert_eq!(
            complete_multipartite_parts(&g, &[0, 1, 2, 3]),
            Some(vec![vec![0, 2], vec![1], vec![3]])
        );
    }

    #[test]
    fn bipartite_and_paths_are_not_multipartite() {
        assert_eq!(complete_multipartite_parts(&cycle(4), &[0, 1, 2, 3]), None);
        assert_eq!(complete_multipartite_parts(&path(4), &[0, 1, 2, 3]), None);
    }

    #[test]
    fn bipartition_examples() {
        let g = Graph::from_edges(2, [(0, 1)]);
        assert_eq!(complete_bipartition(&g, &[0, 1]), Some((vec![0], vec![1])));
        let g = complete_multipartite(&[2, 3]);
        assert_eq!(
            complete_bipartition(&g, &[0, 1, 2, 3, 4]),
            Some((vec![2, 3, 4], vec![0, 1]))
        );
        assert_eq!(complete_bipartition(&path(4), &[0, 1, 2, 3]), None);
        assert_eq!(complete_bipartition(&cycle(5), &[0, 1, 2, 3, 4]), None);
        assert_eq!(complete_bipartition(&Graph::new(1), &[0]), None);
    }

    #[test]
    fn false_twin_examples() {
        assert_eq!(false_twin_classes(&cycle(4)), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(false_twin_classes(&Graph::complete(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(false_twin_classes(&paw()).len(), 4);
    }

    #[test]
    fn paw_accessors() {
        let p = Paw::new(2, 1, 0, 3);
        assert_eq!(p.triangle, [0, 1]);
        assert_eq!(p.edges(), [(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(p.missing_pairs(), [(0, 3), (1, 3)]);
        let q = Paw::new(2, 0, 4, 3);
        assert_eq!(p.common_vertices(&q), 3);
        assert_eq!(p.common_edges(&q), 2);
    }
}
