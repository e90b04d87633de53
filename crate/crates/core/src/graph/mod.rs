//! Graph types shared by every other module.
//!
//! Two representations are used throughout the crate:
//!
//! * [`Multigraph`] keeps an ordered list of edges with stable ids, so
//!   parallel edges are distinct objects. Network graphs and root graphs
//!   live here.
//! * [`SimpleGraph`] is an adjacency-list graph with sorted neighbor lists
//!   and optional vertex weights. Conflict graphs and contracted graphs live
//!   here.
//!
//! Loops are rejected by both types.

mod format;
mod search;

pub use format::{format_weight, parse_graph, parse_weight, serialize_graph};
pub use search::{find_induced, is_isomorphic};

use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;
use thiserror::Error;

/// Dense vertex index, `0..n`.
pub type VertexId = usize;
/// Dense edge index, `0..m`.
pub type EdgeId = usize;
/// Exact non-negative edge or vertex weight.
pub type Weight = Rational64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("negative weight {0}")]
    NegativeWeight(Weight),
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("vertex weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
}

/// One undirected edge of a [`Multigraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    /// Endpoints as `(min, max)`.
    pub fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Loop-free multigraph with edge ids `0..m` in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.add_weighted_edge(u, v, Weight::from_integer(1))
    }

    pub fn add_weighted_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: Weight,
    ) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if weight < Weight::from_integer(0) {
            return Err(GraphError::NegativeWeight(weight));
        }
        let id = self.edges.len();
        self.edges.push(Edge { id, u, v, weight });
        Ok(id)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn set_weight(&mut self, id: EdgeId, weight: Weight) {
        self.edges[id].weight = weight;
    }

    /// Edge ids incident to each vertex, in id order.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for e in &self.edges {
            inc[e.u].push(e.id);
            inc[e.v].push(e.id);
        }
        inc
    }

    /// True when no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    /// Histogram of edge multiplicities: `result[k]` is the number of vertex
    /// pairs joined by exactly `k` parallel edges (index 0 unused).
    pub fn multiplicity_histogram(&self) -> Vec<usize> {
        let mut counts: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for e in &self.edges {
            *counts.entry(e.key()).or_default() += 1;
        }
        let max = counts.values().copied().max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for c in counts.values() {
            hist[*c] += 1;
        }
        hist
    }

    /// Underlying simple graph: one adjacency per joined vertex pair.
    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for e in &self.edges {
            g.add_edge(e.u, e.v)
                .expect("edge endpoints validated on insert");
        }
        g
    }
}

/// Loop-free, parallel-free undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
    vertex_weights: Option<Vec<Weight>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            vertex_weights: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from adjacency lists that are already symmetric, sorted and
    /// free of loops and duplicates.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, ns)| ns.windows(2).all(|w| w[0] < w[1]) && !ns.contains(&u)));
        SimpleGraph {
            adj,
            vertex_weights: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        SimpleGraph::from_sorted_adjacency(adj)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        SimpleGraph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SimpleGraph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// Adds `uv`; returns `false` when it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn with_vertex_weights(mut self, weights: Vec<Weight>) -> Result<Self, GraphError> {
        if weights.len() != self.adj.len() {
            return Err(GraphError::WeightLength {
                got: weights.len(),
                expected: self.adj.len(),
            });
        }
        if let Some(w) = weights.iter().find(|w| **w < Weight::from_integer(0)) {
            return Err(GraphError::NegativeWeight(*w));
        }
        self.vertex_weights = Some(weights);
        Ok(self)
    }

    pub fn clear_vertex_weights(&mut self) {
        self.vertex_weights = None;
    }

    pub fn vertex_weights(&self) -> Option<&[Weight]> {
        self.vertex_weights.as_deref()
    }

    /// Weight of `v`, defaulting to 1 for unweighted graphs.
    pub fn vertex_weight(&self, v: VertexId) -> Weight {
        self.vertex_weights
            .as_ref()
            .map_or(Weight::from_integer(1), |w| w[v])
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Vertex weights are carried over.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<_> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        let mut g = SimpleGraph::from_sorted_adjacency(adj);
        if let Some(w) = &self.vertex_weights {
            g.vertex_weights = Some(vertices.iter().map(|&v| w[v]).collect());
        }
        g
    }

    /// Copy of the graph without vertex `v` (vertices above `v` shift down).
    pub fn remove_vertex(&self, v: VertexId) -> SimpleGraph {
        let keep: Vec<_> = (0..self.adj.len()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Vertices at BFS distance at most `limit` from `source`, with distances.
    pub fn bfs_distances(&self, source: VertexId, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            if limit.is_some_and(|l| d >= l) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Disjoint union, `other`'s vertices shifted by `self.n_vertices()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let off = self.adj.len();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&w| w + off).collect()),
        );
        SimpleGraph::from_sorted_adjacency(adj)
    }
}

/// Injective map from pattern vertices into host vertices:
/// `mapping[i]` is the host image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub mapping: Vec<VertexId>,
}

impl Embedding {
    pub fn image(&self, v: VertexId) -> VertexId {
        self.mapping[v]
    }

    /// Checks that the map is injective and preserves adjacency and
    /// non-adjacency.
    pub fn is_induced(&self, host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.n_vertices() || m.iter().any(|&x| x >= host.n_vertices()) {
            return false;
        }
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if m[i] == m[j] || pattern.has_edge(i, j) != host.has_edge(m[i], m[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Classes of mutually true twins: adjacent vertices with equal closed
/// neighborhoods. Vertices without twins form singleton classes.
///
/// Classes are listed by smallest member and each class is sorted.
pub fn true_twin_classes(g: &SimpleGraph) -> Vec<Vec<VertexId>> {
    // Equal closed neighborhoods already imply adjacency (each vertex is in
    // its own closed neighborhood), so grouping by N[v] is the twin relation.
    let mut by_closed: HashMap<Vec<VertexId>, usize> = HashMap::new();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..g.n_vertices() {
        let ns = g.neighbors(v);
        let pos = ns.partition_point(|&w| w < v);
        let mut closed = Vec::with_capacity(ns.len() + 1);
        closed.extend_from_slice(&ns[..pos]);
        closed.push(v);
        closed.extend_from_slice(&ns[pos..]);
        let next = classes.len();
        let idx = *by_closed.entry(closed).or_insert(next);
        if idx == next {
            classes.push(Vec::new());
        }
        classes[idx].push(v);
    }
    classes
}

/// Connected components, each sorted, listed by smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<VertexId>> {
    let n = g.n_vertices();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Unit-disk graph: points within Euclidean distance `radius` are adjacent.
pub fn geometric_graph(points: &[(f64, f64)], radius: f64) -> Result<SimpleGraph, GraphError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(GraphError::BadRadius(radius));
    }
    let mut g = SimpleGraph::new(points.len());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (dx, dy) = (points[i].0 - points[j].0, points[i].1 - points[j].1);
            let d = dx.hypot(dy);
            if d == 0.0 {
                return Err(GraphError::DuplicatePoint(i, j));
            }
            if d <= radius {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
