//! Weighted oriented graphs and their underlying simple graphs.
//!
//! A [`WeightedOrientedGraph`] is a simple graph whose edges each carry one
//! direction, together with a positive integer weight per vertex. Vertex order
//! in the input fixes the variable order used everywhere downstream.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Source,
    Sink,
    Internal,
}

/// `D = (V, E, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrientedGraph {
    names: Vec<String>,
    weights: Vec<u32>,
    /// Arrows `(u, v)` meaning `u -> v`, in input order.
    edges: Vec<(usize, usize)>,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Deserialize, Serialize)]
struct GraphDocument {
    vertices: Vec<VertexEntry>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

#[derive(Debug, Deserialize, Serialize)]
struct VertexEntry {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<u32>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "0"
        && name != "1"
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

impl WeightedOrientedGraph {
    /// Builds and validates a graph.
    ///
    /// Arrows are `(tail, head)` pairs of vertex names.
    pub fn new<S: AsRef<str>>(
        vertices: &[(S, u32)],
        arrows: &[(S, S)],
    ) -> Result<Self> {
        if vertices.len() > VertexSet::CAPACITY {
            return Err(Error::TooManyVertices {
                found: vertices.len(),
                limit: VertexSet::CAPACITY,
            });
        }
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        let mut weights = Vec::with_capacity(vertices.len());
        for (name, weight) in vertices {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::InvalidName(name.to_string()));
            }
            if *weight == 0 {
                return Err(Error::ZeroWeight(name.to_string()));
            }
            if index.insert(name.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(name.to_string()));
            }
            names.push(name.to_string());
            weights.push(*weight);
        }

        let n = names.len();
        let mut out_adj = vec![VertexSet::empty(); n];
        let mut in_adj = vec![VertexSet::empty(); n];
        let mut edges = Vec::with_capacity(arrows.len());
        for (tail, head) in arrows {
            let (tail, head) = (tail.as_ref(), head.as_ref());
            let u = *index
                .get(tail)
                .ok_or_else(|| Error::UnknownVertex(tail.to_string()))?;
            let v = *index
                .get(head)
                .ok_or_else(|| Error::UnknownVertex(head.to_string()))?;
            if u == v {
                return Err(Error::Loop(tail.to_string()));
            }
            if out_adj[u].contains(v) {
                return Err(Error::DuplicateEdge(tail.to_string(), head.to_string()));
            }
            if out_adj[v].contains(u) {
                return Err(Error::AntiParallel(tail.to_string(), head.to_string()));
            }
            out_adj[u].insert(v);
            in_adj[v].insert(u);
            edges.push((u, v));
        }

        let graph = WeightedOrientedGraph {
            names,
            weights,
            edges,
            out_adj,
            in_adj,
            index,
        };
        for v in 0..n {
            if graph.kind(v) == VertexKind::Source && graph.weights[v] != 1 {
                return Err(Error::WeightedSource {
                    vertex: graph.names[v].clone(),
                    weight: graph.weights[v],
                });
            }
        }
        Ok(graph)
    }

    /// Parses the JSON graph document
    /// `{"vertices": [{"name": "x1", "weight": 2}, ...], "edges": [["x1", "x2"], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        let vertices: Vec<(&str, u32)> = doc
            .vertices
            .iter()
            .map(|v| (v.name.as_str(), v.weight.unwrap_or(1)))
            .collect();
        let arrows: Vec<(&str, &str)> = doc
            .edges
            .iter()
            .map(|(u, v)| (u.as_str(), v.as_str()))
            .collect();
        Self::new(&vertices, &arrows)
    }

    /// The document form of this graph, with every weight written out.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphDocument {
            vertices: self
                .names
                .iter()
                .zip(&self.weights)
                .map(|(name, &w)| VertexEntry {
                    name: name.clone(),
                    weight: Some(w),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| (self.names[u].clone(), self.names[v].clone()))
                .collect(),
        };
        serde_json::to_value(doc).expect("graph document serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|name| self.vertex(name.as_ref()))
            .collect::<Result<_>>()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v].union(self.in_adj[v])
    }

    /// `(N⁻(v), N⁺(v))` for a named vertex.
    pub fn neighborhoods(&self, name: &str) -> Result<(VertexSet, VertexSet)> {
        let v = self.vertex(name)?;
        Ok((self.in_adj[v], self.out_adj[v]))
    }

    /// Isolated vertices count as sources.
    pub fn kind(&self, v: usize) -> VertexKind {
        if self.in_adj[v].is_empty() {
            VertexKind::Source
        } else if self.out_adj[v].is_empty() {
            VertexKind::Sink
        } else {
            VertexKind::Internal
        }
    }

    pub fn classify_vertices(&self) -> Vec<VertexKind> {
        (0..self.vertex_count()).map(|v| self.kind(v)).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.kind(v) == VertexKind::Sink
    }

    /// Vertices of weight greater than one.
    pub fn v_plus(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.weights[v] > 1)
            .collect()
    }

    /// Whether every vertex of weight greater than one is a sink.
    pub fn v_plus_sinks_check(&self) -> bool {
        self.v_plus().iter().all(|v| self.is_sink(v))
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        UnderlyingGraph::new(self.vertex_count(), self.edges.iter().copied())
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }
}

/// The simple graph `G` obtained by forgetting orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingGraph {
    adj: Vec<VertexSet>,
    /// Unordered pairs stored as `(min, max)`, sorted.
    edges: BTreeSet<(usize, usize)>,
}

impl UnderlyingGraph {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![VertexSet::empty(); n];
        let mut edges = BTreeSet::new();
        for (u, v) in pairs {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.insert((u.min(v), u.max(v)));
        }
        UnderlyingGraph { adj, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The connected component containing `start`, restricted to `within`.
    pub fn component(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(self.adj[v].intersection(within));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected_on(&self, within: VertexSet) -> bool {
        match within.iter().next() {
            None => true,
            Some(v) => self.component(v, within) == within,
        }
    }

    pub fn edge_count_within(&self, within: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| within.contains(u) && within.contains(v))
            .count()
    }

    /// If `vertices` induces a cycle, returns it in traversal order starting
    /// from its smallest vertex.
    pub fn induced_cycle_order(&self, vertices: VertexSet) -> Option<Vec<usize>> {
        let k = vertices.len();
        if k < 3 || self.edge_count_within(vertices) != k {
            return None;
        }
        if vertices
            .iter()
            .any(|v| self.adj[v].intersection(vertices).len() != 2)
        {
            return None;
        }
        let start = vertices.iter().next()?;
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.adj[start].intersection(vertices).iter().next()?;
        while cur != start {
            order.push(cur);
            let next = self.adj[cur]
                .intersection(vertices)
                .without(prev)
                .iter()
                .next()?;
            prev = cur;
            cur = next;
        }
        (order.len() == k).then_some(order)
    }

    /// Strips degree-one vertices repeatedly; what remains of a unicyclic
    /// component is its cycle.
    pub fn two_core(&self, within: VertexSet) -> VertexSet {
        let mut core = within;
        loop {
            let leaves: VertexSet = core
                .iter()
                .filter(|&v| self.adj[v].intersection(core).len() <= 1)
                .collect();
            if leaves.is_empty() {
                return core;
            }
            core = core.difference(leaves);
        }
    }
}
