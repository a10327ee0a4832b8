//! Seeded random instances with optional planted structure.
//!
//! A planted spec is a comma-separated list of items, each repeatable:
//!
//! - `cm:<parts>x<size>`: a complete multipartite block with equal parts,
//!   or `cm:<a>+<b>+...` with the listed part sizes (at least three);
//! - `tone:<L>x<R>`: a hub vertex joined to every vertex of `K_{L,R}`;
//! - `pendants:<c>`: `c` degree-one vertices, each attached to a random
//!   vertex of a smallest part of a random block (for `tone` blocks: the
//!   hub, or a side of size one).
//!
//! Blocks occupy consecutive ids from 0 and are pairwise non-adjacent;
//! pendants follow them. The remaining vertices and all pairs between them
//! and blocks keep their Erdős–Rényi edges.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::graph::Graph;
use crate::instance::{Instance, Problem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlantedItem {
    Multipartite { sizes: Vec<usize> },
    TypeOne { left: usize, right: usize },
    Pendants(usize),
}

impl PlantedItem {
    fn vertices(&self) -> usize {
        match self {
            PlantedItem::Multipartite { sizes } => sizes.iter().sum(),
            PlantedItem::TypeOne { left, right } => 1 + left + right,
            PlantedItem::Pendants(c) => *c,
        }
    }
}

impl fmt::Display for PlantedItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlantedItem::Multipartite { sizes } => {
                if sizes.iter().all(|&s| s == sizes[0]) {
                    write!(f, "cm:{}x{}", sizes.len(), sizes[0])
                } else {
                    let list: Vec<String> = sizes.iter().map(usize::to_string).collect();
                    write!(f, "cm:{}", list.join("+"))
                }
            }
            PlantedItem::TypeOne { left, right } => write!(f, "tone:{left}x{right}"),
            PlantedItem::Pendants(c) => write!(f, "pendants:{c}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlantedSpec {
    pub items: Vec<PlantedItem>,
}

impl PlantedSpec {
    /// Vertices the planted structure occupies.
    pub fn vertices(&self) -> usize {
        self.items.iter().map(|i| i.vertices()).sum()
    }
}

impl fmt::Display for PlantedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}

impl FromStr for PlantedSpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::PlantedSyntax(s.to_string());
        let pair = |v: &str| -> Result<(usize, usize), GenerateError> {
            let (a, b) = v.split_once('x').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        let items = s
            .split(',')
            .map(|item| {
                let (name, value) = item.trim().split_once(':').ok_or_else(bad)?;
                match name {
                    "cm" => {
                        let sizes = if value.contains('+') {
                            value
                                .split('+')
                                .map(|v| v.parse().map_err(|_| bad()))
                                .collect::<Result<Vec<usize>, _>>()?
                        } else {
                            let (parts, size) = pair(value)?;
                            vec![size; parts]
                        };
                        if sizes.len() < 3 || sizes.contains(&0) {
                            return Err(bad());
                        }
                        Ok(PlantedItem::Multipartite { sizes })
                    }
                    "tone" => {
                        let (left, right) = pair(value)?;
                        if left == 0 || right == 0 {
                            return Err(bad());
                        }
                        Ok(PlantedItem::TypeOne { left, right })
                    }
                    "pendants" => Ok(PlantedItem::Pendants(value.parse().map_err(|_| bad())?)),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(PlantedSpec { items })
    }
}

/// Builds a random instance; identical arguments give identical instances.
pub fn generate_random_instance(
    seed: u64,
    n: usize,
    p: f64,
    k: i64,
    problem: Problem,
    planted: Option<&PlantedSpec>,
) -> Result<Instance, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::Probability(p));
    }
    let needed = planted.map_or(0, PlantedSpec::vertices);
    if needed > n {
        return Err(GenerateError::TooSmall { needed, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    let Some(spec) = planted else {
        return Ok(Instance::new(g, k, problem));
    };

    // isolate the planted region, then lay the blocks out
    for u in 0..needed {
        for v in u + 1..needed {
            g.delete_edge(u, v);
        }
    }
    let mut next = 0;
    // smallest parts of each block: where its pendants may attach
    let mut anchors: Vec<Vec<usize>> = Vec::new();
    for item in &spec.items {
        match item {
            PlantedItem::Multipartite { sizes } => {
                let part_of: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| vec![i; s]).collect();
                for (a, &pa) in part_of.iter().enumerate() {
                    for (b, &pb) in part_of.iter().enumerate().skip(a + 1) {
                        if pa != pb {
                            g.insert_edge(next + a, next + b);
                        }
                    }
                }
                let min = *sizes.iter().min().expect("at least three parts");
                anchors.push((0..part_of.len()).filter(|&v| sizes[part_of[v]] == min).map(|v| next + v).collect());
                next += part_of.len();
            }
            &PlantedItem::TypeOne { left, right } => {
                let hub = next;
                let l = hub + 1..hub + 1 + left;
                let r = l.end..l.end + right;
                for u in l.clone() {
                    g.insert_edge(hub, u);
                    for v in r.clone() {
                        g.insert_edge(u, v);
                    }
                }
                for v in r.clone() {
                    g.insert_edge(hub, v);
                }
                let mut smallest = vec![hub];
                for side in [l, r] {
                    if side.len() == 1 {
                        smallest.extend(side);
                    }
                }
                anchors.push(smallest);
                next = hub + 1 + left + right;
            }
            PlantedItem::Pendants(_) => {}
        }
    }
    for item in &spec.items {
        if let &PlantedItem::Pendants(c) = item {
            for x in next..next + c {
                for v in 0..n {
                    g.delete_edge(x, v);
                }
                if !anchors.is_empty() {
                    let block = &anchors[rng.gen_range(0..anchors.len())];
                    g.insert_edge(x, block[rng.gen_range(0..block.len())]);
                }
            }
            next += c;
        }
    }
    Ok(Instance::new(g, k, problem))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let g = generate_random_instance(7, 8, 0.0, 1, Problem::Deletion, None).unwrap();
        assert_eq!(g.graph, Graph::new(8));
        let g = generate_random_instance(7, 4, 1.0, 1, Problem::Deletion, None).unwrap();
        assert_eq!(g.graph, Graph::complete(4));
    }

    #[test]
    fn deterministic() {
        let spec: PlantedSpec = "cm:3x2,pendants:2".parse().unwrap();
        let a = generate_random_instance(3, 12, 0.3, 2, Problem::Completion, Some(&spec)).unwrap();
        let b = generate_random_instance(3, 12, 0.3, 2, Problem::Completion, Some(&spec)).unwrap();
        assert_eq!(a, b);
        let c = generate_random_instance(4, 12, 0.3, 2, Problem::Completion, Some(&spec)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn spec_syntax() {
        let spec: PlantedSpec = "cm:3x2, tone:4x1,pendants:1,cm:4x1,cm:1+1+5".parse().unwrap();
        assert_eq!(spec.to_string(), "cm:3x2,tone:4x1,pendants:1,cm:4x1,cm:1+1+5");
        assert_eq!(spec.vertices(), 6 + 6 + 1 + 4 + 7);
        assert_eq!("cm:2+2+2".parse::<PlantedSpec>().unwrap().to_string(), "cm:3x2");
        for bad in ["", "cm:2x3", "cm:3", "cm:1+2", "cm:1+0+2", "tone:0x1", "star:3", "pendants:x"] {
            assert!(bad.parse::<PlantedSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn planted_layout() {
        let spec: PlantedSpec = "cm:3x1,tone:2x1,pendants:1".parse().unwrap();
        let inst = generate_random_instance(1, 8, 0.0, 0, Problem::Completion, Some(&spec)).unwrap();
        let g = inst.graph;
        // triangle 0..3, hub 3 with left {4, 5}, right {6}
        assert_eq!(g.m(), 3 + 5 + 1);
        assert!(g.has_edge(3, 4) && g.has_edge(4, 6) && !g.has_edge(4, 5));
        assert_eq!(g.degree(7), 1);
    }

    #[test]
    fn pendants_attach_to_smallest_parts() {
        let spec: PlantedSpec = "cm:3+1+3,pendants:4".parse().unwrap();
        let inst = generate_random_instance(2, 11, 0.0, 0, Problem::Completion, Some(&spec)).unwrap();
        for x in 7..11 {
            assert_eq!(inst.graph.neighbors(x).ones().collect::<Vec<_>>(), vec![3]);
        }
    }

    #[test]
    fn planted_errors() {
        let spec: PlantedSpec = "cm:3x3".parse().unwrap();
        assert_eq!(
            generate_random_instance(1, 8, 0.0, 0, Problem::Completion, Some(&spec)),
            Err(GenerateError::TooSmall { needed: 9, n: 8 })
        );
        assert_eq!(
            generate_random_instance(1, 8, 1.5, 0, Problem::Completion, None),
            Err(GenerateError::Probability(1.5))
        );
    }
}
