//! Vertex covers, the L1/L2/L3 partition, and strong vertex covers.
//!
//! Enumeration walks every subset of the vertex set as a bitmask. When a mask
//! leaves an edge `{u, v}` (with `u < v`) uncovered, no mask between it and the
//! next one that sets bit `u` can be a cover, so the walk jumps straight there.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by the exhaustive enumerations by default.
pub const DEFAULT_VERTEX_LIMIT: usize = 24;

/// A vertex cover together with its L1/L2/L3 split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverPartition {
    pub cover: VertexSet,
    /// Vertices with an out-neighbour outside the cover.
    pub l1: VertexSet,
    /// Vertices not in `l1` with an in-neighbour outside the cover.
    pub l2: VertexSet,
    pub l3: VertexSet,
    pub is_minimal: bool,
    pub is_strong: bool,
}

/// JSON row emitted by the `covers` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct CoverRecord {
    pub cover: Vec<String>,
    #[serde(rename = "L1")]
    pub l1: Vec<String>,
    #[serde(rename = "L2")]
    pub l2: Vec<String>,
    #[serde(rename = "L3")]
    pub l3: Vec<String>,
    pub minimal: bool,
    pub strong: bool,
}

impl CoverPartition {
    pub fn record(&self, g: &WeightedOrientedGraph) -> CoverRecord {
        CoverRecord {
            cover: g.set_names(self.cover),
            l1: g.set_names(self.l1),
            l2: g.set_names(self.l2),
            l3: g.set_names(self.l3),
            minimal: self.is_minimal,
            strong: self.is_strong,
        }
    }
}

pub fn is_vertex_cover(g: &WeightedOrientedGraph, subset: VertexSet) -> bool {
    uncovered_edge(g, subset).is_none()
}

/// An edge with neither endpoint in `subset`, preferring the one whose smaller
/// endpoint is largest (it gives the longest skip during enumeration).
fn uncovered_edge(g: &WeightedOrientedGraph, subset: VertexSet) -> Option<(usize, usize)> {
    g.arrows()
        .iter()
        .filter(|&&(u, v)| !subset.contains(u) && !subset.contains(v))
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .max()
}

/// Single-vertex-removal minimality check.
pub fn is_minimal_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> bool {
    is_vertex_cover(g, cover) && cover.iter().all(|v| !is_vertex_cover(g, cover.without(v)))
}

fn check_limit(g: &WeightedOrientedGraph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit.min(63) {
        Err(Error::Limit(format!(
            "cover enumeration supports at most {limit} vertices, graph has {}",
            g.vertex_count()
        )))
    } else {
        Ok(())
    }
}

/// Every vertex cover in canonical order (size, then lexicographic).
pub fn enumerate_covers(g: &WeightedOrientedGraph, limit: usize) -> Result<Vec<VertexSet>> {
    check_limit(g, limit)?;
    let n = g.vertex_count();
    let total: u64 = 1u64 << n;
    // Chunks on the high bits. A skip may run past the end of its chunk, which
    // is fine: it only passes over non-covers.
    let chunk_bits = n.saturating_sub(10) as u32;
    let chunks: u64 = 1u64 << chunk_bits;
    let width = total / chunks;
    let mut covers: Vec<VertexSet> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let start = chunk * width;
            let end = start + width;
            let mut found = Vec::new();
            let mut mask = start;
            while mask < end {
                let set = VertexSet::from_bits(mask);
                match uncovered_edge(g, set) {
                    None => {
                        found.push(set);
                        mask += 1;
                    }
                    Some((u, _)) => {
                        // Smallest larger mask with bit u set.
                        mask = (mask & !((1u64 << u) - 1)) | (1u64 << u);
                    }
                }
            }
            found
        })
        .collect();
    covers.sort_by(VertexSet::canonical_cmp);
    Ok(covers)
}

pub fn enumerate_minimal_covers(g: &WeightedOrientedGraph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_covers_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

pub fn enumerate_minimal_covers_with_limit(
    g: &WeightedOrientedGraph,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    Ok(enumerate_covers(g, limit)?
        .into_iter()
        .filter(|&c| is_minimal_cover(g, c))
        .collect())
}

pub fn partition_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> Result<CoverPartition> {
    if !cover.is_subset(g.all_vertices()) || !is_vertex_cover(g, cover) {
        return Err(Error::NotACover);
    }
    let outside = cover.complement(g.vertex_count());
    let mut l1 = VertexSet::empty();
    let mut l2 = VertexSet::empty();
    for x in cover.iter() {
        if !g.out_neighbors(x).is_disjoint(outside) {
            l1.insert(x);
        } else if !g.in_neighbors(x).is_disjoint(outside) {
            l2.insert(x);
        }
    }
    let l3 = cover.difference(l1.union(l2));
    let l23 = l2.union(l3);
    // Each x in L3 needs an arrow (y, x) from a weighted y in L2 ∪ L3.
    let is_strong = l3.iter().all(|x| {
        g.in_neighbors(x)
            .intersection(l23)
            .iter()
            .any(|y| g.weight(y) > 1)
    });
    Ok(CoverPartition {
        cover,
        l1,
        l2,
        l3,
        is_minimal: l3.is_empty(),
        is_strong,
    })
}

pub fn is_strong_cover(g: &WeightedOrientedGraph, cover: VertexSet) -> Result<bool> {
    Ok(partition_cover(g, cover)?.is_strong)
}

/// Minimal covers first, then the rest; each group in canonical order.
fn strong_order(a: &CoverPartition, b: &CoverPartition) -> Ordering {
    b.is_minimal
        .cmp(&a.is_minimal)
        .then_with(|| a.cover.canonical_cmp(&b.cover))
}

pub fn enumerate_strong_covers(g: &WeightedOrientedGraph) -> Result<Vec<CoverPartition>> {
    enumerate_strong_covers_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

pub fn enumerate_strong_covers_with_limit(
    g: &WeightedOrientedGraph,
    limit: usize,
) -> Result<Vec<CoverPartition>> {
    let mut strong: Vec<CoverPartition> = enumerate_covers(g, limit)?
        .into_iter()
        .map(|c| partition_cover(g, c).expect("enumerated sets are covers"))
        .filter(|p| p.is_strong)
        .collect();
    strong.sort_by(strong_order);
    Ok(strong)
}

/// Whether every strong cover is minimal.
pub fn has_minimal_strong_property(g: &WeightedOrientedGraph) -> Result<bool> {
    Ok(enumerate_strong_covers(g)?.iter().all(|p| p.is_minimal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle5(weights: [u32; 5], arrows: &[(&str, &str)]) -> WeightedOrientedGraph {
        let names = ["x1", "x2", "x3", "x4", "x5"];
        let vertices: Vec<(&str, u32)> = names.iter().copied().zip(weights).collect();
        WeightedOrientedGraph::new(&vertices, arrows).unwrap()
    }

    fn d1() -> WeightedOrientedGraph {
        cycle5(
            [2; 5],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")],
        )
    }

    fn d2() -> WeightedOrientedGraph {
        cycle5(
            [1, 2, 1, 2, 1],
            &[("x1", "x2"), ("x3", "x2"), ("x3", "x4"), ("x5", "x4"), ("x1", "x5")],
        )
    }

    fn set(g: &WeightedOrientedGraph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    /// Plain subset scan with an edge-by-edge check, no skipping.
    fn brute_covers(g: &WeightedOrientedGraph) -> Vec<VertexSet> {
        let n = g.vertex_count();
        let mut out: Vec<VertexSet> = (0..1u64 << n)
            .map(VertexSet::from_bits)
            .filter(|s| {
                g.arrows()
                    .iter()
                    .all(|&(u, v)| s.contains(u) || s.contains(v))
            })
            .collect();
        out.sort_by(VertexSet::canonical_cmp);
        out
    }

    #[test]
    fn cover_checks_on_c5() {
        let g = d2();
        assert!(is_vertex_cover(&g, set(&g, &["x1", "x2", "x4"])));
        assert!(!is_vertex_cover(&g, set(&g, &["x1", "x2"])));
        assert!(is_vertex_cover(&g, g.all_vertices()));
    }

    #[test]
    fn c5_minimal_covers() {
        let g = d2();
        let covers = enumerate_minimal_covers(&g).unwrap();
        let expected: Vec<VertexSet> = [
            ["x1", "x2", "x4"],
            ["x1", "x3", "x4"],
            ["x1", "x3", "x5"],
            ["x2", "x3", "x5"],
            ["x2", "x4", "x5"],
        ]
        .iter()
        .map(|c| set(&g, c))
        .collect();
        assert_eq!(covers, expected);
        assert_eq!(enumerate_covers(&g, 24).unwrap().len(), 11);
    }

    #[test]
    fn skipping_enumeration_matches_brute_force() {
        for g in [d1(), d2()] {
            assert_eq!(enumerate_covers(&g, 24).unwrap(), brute_covers(&g));
        }
        // A graph large enough to be split into several chunks.
        let names: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        let vertices: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 1)).collect();
        let arrows: Vec<(&str, &str)> = (0..13)
            .flat_map(|i| [(i, (i + 1) % 13), (i, (i + 5) % 13)])
            .map(|(a, b)| (names[a].as_str(), names[b].as_str()))
            .collect();
        let g = WeightedOrientedGraph::new(&vertices, &arrows).unwrap();
        assert_eq!(enumerate_covers(&g, 24).unwrap(), brute_covers(&g));
    }

    #[test]
    fn single_edge_covers() {
        let g = WeightedOrientedGraph::new(&[("u", 1), ("v", 3)], &[("u", "v")]).unwrap();
        let covers = enumerate_minimal_covers(&g).unwrap();
        assert_eq!(covers, vec![set(&g, &["u"]), set(&g, &["v"])]);
        assert!(has_minimal_strong_property(&g).unwrap());
    }

    #[test]
    fn complete_graph_covers_omit_one_vertex() {
        for n in 2..=6 {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let vertices: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 1)).collect();
            let mut arrows = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    arrows.push((names[i].as_str(), names[j].as_str()));
                }
            }
            let g = WeightedOrientedGraph::new(&vertices, &arrows).unwrap();
            let covers = enumerate_minimal_covers(&g).unwrap();
            assert_eq!(covers.len(), n);
            assert!(covers.iter().all(|c| c.len() == n - 1));
        }
    }

    #[test]
    fn partitions_from_hand_evaluation() {
        let g = d2();
        let p = partition_cover(&g, set(&g, &["x1", "x2", "x4"])).unwrap();
        assert_eq!(p.l1, set(&g, &["x1"]));
        assert_eq!(p.l2, set(&g, &["x2", "x4"]));
        assert!(p.l3.is_empty());
        assert!(p.is_minimal && p.is_strong);

        let g = d1();
        let p = partition_cover(&g, g.all_vertices()).unwrap();
        assert!(p.l1.is_empty() && p.l2.is_empty());
        assert_eq!(p.l3, g.all_vertices());
        assert!(p.is_strong);

        let p = partition_cover(&g, set(&g, &["x1", "x2", "x3", "x4"])).unwrap();
        assert_eq!(p.l1, set(&g, &["x4"]));
        assert_eq!(p.l2, set(&g, &["x1"]));
        assert_eq!(p.l3, set(&g, &["x2", "x3"]));
    }

    #[test]
    fn non_strong_cover_of_d2() {
        let g = d2();
        let c = set(&g, &["x1", "x2", "x3", "x4"]);
        assert!(!is_strong_cover(&g, c).unwrap());
        assert!(matches!(
            partition_cover(&g, set(&g, &["x1"])),
            Err(Error::NotACover)
        ));
    }

    #[test]
    fn strong_cover_counts() {
        let strong = enumerate_strong_covers(&d2()).unwrap();
        assert_eq!(strong.len(), 5);
        assert!(strong.iter().all(|p| p.is_minimal));
        assert!(has_minimal_strong_property(&d2()).unwrap());

        let strong = enumerate_strong_covers(&d1()).unwrap();
        assert_eq!(strong.len(), 11);
        assert!(!has_minimal_strong_property(&d1()).unwrap());
        // Minimal ones come first.
        assert!(strong[..5].iter().all(|p| p.is_minimal));
        assert_eq!(strong[10].cover, d1().all_vertices());

        let plain = cycle5(
            [1; 5],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")],
        );
        assert_eq!(enumerate_strong_covers(&plain).unwrap().len(), 5);
    }

    #[test]
    fn limit_is_enforced() {
        let g = d2();
        assert!(matches!(enumerate_covers(&g, 4), Err(Error::Limit(_))));
    }
}
