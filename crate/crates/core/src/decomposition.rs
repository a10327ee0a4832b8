//! Modulators and the classification of the components they leave behind.
//!
//! A modulator `M` meets every induced paw in at least two vertices, so
//! `G - M` is paw-free and each of its components is triangle-free or
//! complete multipartite. Triangle-free components split further into type I
//! (some modulator vertex closes a triangle with one of its edges) and type II.

use crate::error::DecompositionError;
use crate::graph::{vertex_set, Graph, VertexSet};
use crate::structure::{
    complete_bipartition, complete_multipartite_parts, enumerate_paws, is_triangle_free_within, Paw,
};

/// How a modulator was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModulatorWitness {
    /// Paws pairwise sharing at most one vertex (completion construction).
    SelectedPaws(Vec<Paw>),
    /// Pairwise edge-disjoint paws (deletion construction).
    Packing(Vec<Paw>),
}

impl ModulatorWitness {
    pub fn paws(&self) -> &[Paw] {
        match self {
            ModulatorWitness::SelectedPaws(p) | ModulatorWitness::Packing(p) => p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulator {
    pub vertices: VertexSet,
    pub witness: ModulatorWitness,
}

impl Modulator {
    pub fn len(&self) -> usize {
        self.vertices.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Triangle-free and closing a triangle with a modulator vertex; such a
    /// component is complete bipartite with sides `left` (the larger) and
    /// `right`.
    TypeOne { left: Vec<usize>, right: Vec<usize> },
    /// Triangle-free, closing no triangle with any single modulator vertex.
    TypeTwo,
    /// Complete multipartite with at least three parts, sorted by minimum id.
    CompleteMultipartite { parts: Vec<Vec<usize>> },
}

/// One component of `G - M` together with its kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl ComponentClass {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_type_one(&self) -> bool {
        matches!(self.kind, ComponentKind::TypeOne { .. })
    }

    pub fn is_type_two(&self) -> bool {
        matches!(self.kind, ComponentKind::TypeTwo)
    }

    pub fn is_multipartite(&self) -> bool {
        matches!(self.kind, ComponentKind::CompleteMultipartite { .. })
    }

    pub fn parts(&self) -> Option<&[Vec<usize>]> {
        match &self.kind {
            ComponentKind::CompleteMultipartite { parts } => Some(parts),
            _ => None,
        }
    }

    pub fn bipartition(&self) -> Option<(&[usize], &[usize])> {
        match &self.kind {
            ComponentKind::TypeOne { left, right } => Some((left, right)),
            _ => None,
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        vertex_set(n, self.vertices.iter().copied())
    }
}

/// Whether every induced paw of `g` has at least two vertices in `m`.
pub fn verify_modulator(g: &Graph, m: &VertexSet) -> bool {
    enumerate_paws(g)
        .iter()
        .all(|p| p.vertices().iter().filter(|&&v| m.contains(v)).count() >= 2)
}

/// Whether some modulator vertex is adjacent to both ends of an edge inside
/// `component`.
pub fn forms_triangle_with(g: &Graph, m: &VertexSet, component: &VertexSet) -> bool {
    component.ones().any(|u| {
        g.neighbors(u).intersection(component).any(|w| {
            w > u
                && g.neighbors(u)
                    .intersection(g.neighbors(w))
                    .any(|x| m.contains(x))
        })
    })
}

/// Classifies every component of `g - m`, in order of minimum vertex.
///
/// Fails only when `m` is not a modulator of `g`.
pub fn classify_components(g: &Graph, m: &VertexSet) -> Result<Vec<ComponentClass>, DecompositionError> {
    let mut rest = g.full_set();
    rest.difference_with(m);
    g.components_within(&rest)
        .into_iter()
        .map(|vertices| {
            let set = vertex_set(g.n(), vertices.iter().copied());
            let kind = if is_triangle_free_within(g, &set) {
                if forms_triangle_with(g, m, &set) {
                    let (left, right) = complete_bipartition(g, &vertices)
                        .ok_or(DecompositionError::NotCompleteBipartite { vertex: vertices[0] })?;
                    ComponentKind::TypeOne { left, right }
                } else {
                    ComponentKind::TypeTwo
                }
            } else {
                let parts = complete_multipartite_parts(g, &vertices)
                    .ok_or(DecompositionError::NotPawFree { vertex: vertices[0] })?;
                ComponentKind::CompleteMultipartite { parts }
            };
            Ok(ComponentClass { vertices, kind })
        })
        .collect()
}

/// The part of a complete multipartite component that `v` misses entirely,
/// or `None` when `v` sees all of it.
///
/// Under a valid modulator the non-neighbours of `v` are empty or exactly one
/// part; anything else is reported as a violation.
pub fn nonadjacent_part<'a>(
    g: &Graph,
    cls: &'a ComponentClass,
    v: usize,
) -> Result<Option<&'a [usize]>, DecompositionError> {
    let parts = cls
        .parts()
        .ok_or(DecompositionError::NotPawFree { vertex: cls.vertices[0] })?;
    let missed: Vec<usize> = cls
        .vertices
        .iter()
        .copied()
        .filter(|&u| !g.has_edge(v, u))
        .collect();
    if missed.is_empty() {
        return Ok(None);
    }
    parts
        .iter()
        .find(|part| **part == missed)
        .map(|part| Some(part.as_slice()))
        .ok_or(DecompositionError::SplitPart { modulator: v })
}
