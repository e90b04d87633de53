//! Line graphs, graph powers, M-hop conflict graphs, and recognition of
//! line graphs of simple graphs together with a root.
//!
//! Recognition grows a root one line-graph vertex at a time, visiting each
//! connected component in BFS order so every new vertex already has a
//! processed neighbor. While the partial root is small it may have several
//! inequivalent shapes, so all of them are kept; once it has five or more
//! vertices Whitney's theorem makes it unique up to relabeling, and the
//! candidate list collapses to a single entry after deduplication. Each step
//! only inspects the neighbors of the new vertex, so the whole pass costs
//! `O(|V| + |E|)` on top of a bounded amount of small-case work.

use std::sync::OnceLock;

use thiserror::Error;

use crate::forbidden::{self, Catalog};
use crate::graph::{
    connected_components, is_isomorphic, EdgeId, Multigraph, SimpleGraph, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineGraphError {
    #[error("power/hop count must be at least 1")]
    ZeroPower,
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("map is not a bijection between {vertices} vertices and {edges} edges")]
    NotBijective { vertices: usize, edges: usize },
}

/// Bijection between the vertices of a line graph and the edges of its root.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexEdgeMap {
    edge_of_vertex: Vec<EdgeId>,
    vertex_of_edge: Vec<VertexId>,
}

impl VertexEdgeMap {
    pub fn identity(n: usize) -> Self {
        VertexEdgeMap {
            edge_of_vertex: (0..n).collect(),
            vertex_of_edge: (0..n).collect(),
        }
    }

    /// Builds the map from `edge_of_vertex[v]`; fails unless it is a
    /// permutation of `0..len`.
    pub fn from_edge_of_vertex(edge_of_vertex: Vec<EdgeId>) -> Result<Self, LineGraphError> {
        let n = edge_of_vertex.len();
        let mut vertex_of_edge = vec![usize::MAX; n];
        for (v, &e) in edge_of_vertex.iter().enumerate() {
            if e >= n || vertex_of_edge[e] != usize::MAX {
                return Err(LineGraphError::NotBijective {
                    vertices: n,
                    edges: n,
                });
            }
            vertex_of_edge[e] = v;
        }
        Ok(VertexEdgeMap {
            edge_of_vertex,
            vertex_of_edge,
        })
    }

    pub fn len(&self) -> usize {
        self.edge_of_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_of_vertex.is_empty()
    }

    pub fn edge_of(&self, v: VertexId) -> EdgeId {
        self.edge_of_vertex[v]
    }

    pub fn vertex_of(&self, e: EdgeId) -> VertexId {
        self.vertex_of_edge[e]
    }

    /// `(vertex, edge)` pairs in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.edge_of_vertex.iter().copied().enumerate()
    }
}

/// A line graph together with its vertex-to-root-edge map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphResult {
    pub graph: SimpleGraph,
    pub map: VertexEdgeMap,
}

/// `L(g)`: vertex `i` is edge `i` of `g`; parallel edges become adjacent.
pub fn line_graph(g: &Multigraph) -> LineGraphResult {
    let m = g.n_edges();
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); m];
    for inc in g.incidence() {
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    for ns in &mut adj {
        ns.sort_unstable();
        ns.dedup();
    }
    LineGraphResult {
        graph: SimpleGraph::from_sorted_adjacency(adj),
        map: VertexEdgeMap::identity(m),
    }
}

/// `g^t`: vertices at distance at most `t` become adjacent.
pub fn graph_power(g: &SimpleGraph, t: usize) -> Result<SimpleGraph, LineGraphError> {
    if t == 0 {
        return Err(LineGraphError::ZeroPower);
    }
    if t == 1 {
        let mut out = g.clone();
        out.clear_vertex_weights();
        return Ok(out);
    }
    let adj = (0..g.n_vertices())
        .map(|s| {
            g.bfs_distances(s, Some(t))
                .iter()
                .enumerate()
                .filter_map(|(v, d)| (v != s && d.is_some()).then_some(v))
                .collect()
        })
        .collect();
    Ok(SimpleGraph::from_sorted_adjacency(adj))
}

/// Edge distance: the minimum vertex distance between an endpoint of `e1`
/// and an endpoint of `e2`. `None` means the edges are in different
/// components.
pub fn edge_distance(
    g: &SimpleGraph,
    e1: (VertexId, VertexId),
    e2: (VertexId, VertexId),
) -> Result<Option<usize>, LineGraphError> {
    for (a, b) in [e1, e2] {
        if a >= g.n_vertices() || b >= g.n_vertices() || !g.has_edge(a, b) {
            return Err(LineGraphError::NotAnEdge(a, b));
        }
    }
    let mut best = None;
    for s in [e1.0, e1.1] {
        let dist = g.bfs_distances(s, None);
        for t in [e2.0, e2.1] {
            if let Some(d) = dist[t] {
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
    }
    Ok(best)
}

/// M-hop conflict graph `[L(network)]^hops`; vertex `i` is network link `i`.
pub fn conflict_graph(
    network: &Multigraph,
    hops: usize,
) -> Result<LineGraphResult, LineGraphError> {
    let lg = line_graph(network);
    Ok(LineGraphResult {
        graph: graph_power(&lg.graph, hops)?,
        map: lg.map,
    })
}

/// Root of one connected component.
///
/// `ends[i]` is the root edge of `vertices[i]`, with root vertices numbered
/// locally from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRoot {
    pub n_vertices: usize,
    pub ends: Vec<(usize, usize)>,
}

/// Candidate roots for one connected component. Only triangle components
/// keep two candidates (the star `K1,3` first, then `K3`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentRoot {
    pub vertices: Vec<VertexId>,
    pub candidates: Vec<LocalRoot>,
}

impl ComponentRoot {
    pub fn is_ambiguous(&self) -> bool {
        self.candidates.len() > 1
    }
}

/// A simple root of a line graph.
///
/// Root edge `i` corresponds to input vertex `i`, so `map` is the identity;
/// it is kept explicit because downstream code composes maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRoot {
    pub root: Multigraph,
    pub map: VertexEdgeMap,
    pub components: Vec<ComponentRoot>,
}

impl LineRoot {
    /// Triangle components, for which the `K3` root is an equally valid
    /// alternative to the `K1,3` root used in `root`.
    pub fn alternatives(&self) -> impl Iterator<Item = &ComponentRoot> {
        self.components.iter().filter(|c| c.is_ambiguous())
    }

    /// Assembles a root choosing `choice[i]` for the `i`-th component.
    pub fn with_choices(components: &[ComponentRoot], choice: &[usize], n: usize) -> LineRoot {
        let picked: Vec<&LocalRoot> = components
            .iter()
            .zip(choice)
            .map(|(c, &k)| &c.candidates[k])
            .collect();
        let root = assemble(components, &picked, n);
        LineRoot {
            root,
            map: VertexEdgeMap::identity(n),
            components: components.to_vec(),
        }
    }
}

/// Joins local roots into one root whose edge `v` belongs to vertex `v`.
fn assemble(components: &[ComponentRoot], picked: &[&LocalRoot], n: usize) -> Multigraph {
    let mut ends = vec![(0, 0); n];
    let mut offset = 0;
    for (comp, local) in components.iter().zip(picked) {
        for (i, &v) in comp.vertices.iter().enumerate() {
            let (a, b) = local.ends[i];
            ends[v] = (a + offset, b + offset);
        }
        offset += local.n_vertices;
    }
    let mut root = Multigraph::new(offset);
    for (a, b) in ends {
        root.add_edge(a, b).expect("local roots are loop-free");
    }
    root
}

/// Obstruction found by a failed recognition: a minimal induced subgraph
/// that has no root. `entry` names the catalog graph it is isomorphic to,
/// and then `vertices[i]` is the image of that entry's vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub entry: Option<String>,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a line graph (witness {witness:?})")]
pub struct NotLineGraph {
    pub witness: Witness,
}

/// Recognizes line graphs of simple graphs, returning a root or a witness
/// isomorphic to one of Beineke's nine graphs.
pub fn recognize_line_graph(h: &SimpleGraph) -> Result<LineRoot, NotLineGraph> {
    match root_components(h) {
        Ok(components) => {
            let choice = vec![0; components.len()];
            let result = LineRoot::with_choices(&components, &choice, h.n_vertices());
            debug_assert!(line_graph(&result.root).graph == stripped(h));
            Ok(result)
        }
        Err(failed) => {
            let vertices = minimize_obstruction(h, failed, |g| root_components(g).is_ok());
            Err(NotLineGraph {
                witness: identify(h, vertices, beineke9()),
            })
        }
    }
}

/// True when `h` is the line graph of a simple graph.
pub fn is_line_graph(h: &SimpleGraph) -> bool {
    root_components(h).is_ok()
}

fn stripped(h: &SimpleGraph) -> SimpleGraph {
    let mut g = h.clone();
    g.clear_vertex_weights();
    g
}

fn beineke9() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| forbidden::load_catalog("beineke9").expect("bundled catalog"))
}

/// Shrinks a failing vertex set to a minimal one, given a hereditary
/// predicate `ok`. Deletions are tried in descending vertex order.
pub(crate) fn minimize_obstruction(
    h: &SimpleGraph,
    mut set: Vec<VertexId>,
    ok: impl Fn(&SimpleGraph) -> bool,
) -> Vec<VertexId> {
    set.sort_unstable();
    let mut i = set.len();
    while i > 0 {
        i -= 1;
        let mut trial = set.clone();
        trial.remove(i);
        if !ok(&h.induced_subgraph(&trial)) {
            set = trial;
        }
    }
    set
}

/// Matches a vertex set against catalog entries up to isomorphism.
pub(crate) fn identify(h: &SimpleGraph, vertices: Vec<VertexId>, catalog: &Catalog) -> Witness {
    let sub = h.induced_subgraph(&vertices);
    for entry in &catalog.entries {
        if let Some(iso) = is_isomorphic(&entry.graph, &sub) {
            let mapped = iso.mapping.iter().map(|&i| vertices[i]).collect();
            return Witness {
                entry: Some(entry.name.clone()),
                vertices: mapped,
            };
        }
    }
    Witness {
        entry: None,
        vertices,
    }
}

/// Candidate roots for every component, or the vertex set of the first
/// BFS prefix that has no root.
pub(crate) fn root_components(h: &SimpleGraph) -> Result<Vec<ComponentRoot>, Vec<VertexId>> {
    let mut grower = Grower::new(h.n_vertices());
    connected_components(h)
        .into_iter()
        .map(|comp| grower.component(h, &comp))
        .collect()
}

/// Partial root: `stars[x]` lists the processed vertices whose root edge
/// touches root vertex `x`; `ends[k]` is the root edge of the `k`-th
/// processed vertex.
#[derive(Debug, Clone)]
struct Partial {
    stars: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
}

impl Partial {
    fn touches(&self, e: usize, x: usize) -> bool {
        let (a, b) = self.ends[e];
        a == x || b == x
    }

    fn family(&self) -> Vec<&Vec<usize>> {
        let mut f: Vec<_> = self.stars.iter().collect();
        f.sort_unstable();
        f
    }

    fn push(&mut self, k: usize, x: usize, y: Option<usize>) {
        let y = y.unwrap_or_else(|| {
            self.stars.push(Vec::new());
            self.stars.len() - 1
        });
        self.ends.push((x, y));
        self.stars[x].push(k);
        self.stars[y].push(k);
    }
}

struct Grower {
    /// Position of each vertex in the current component's BFS order.
    pos: Vec<usize>,
    /// `stamp[k] == k + 1` marks local vertex `k` as a neighbor of the
    /// vertex being added.
    stamp: Vec<usize>,
}

impl Grower {
    fn new(n: usize) -> Self {
        Grower {
            pos: vec![usize::MAX; n],
            stamp: vec![0; n],
        }
    }

    fn component(
        &mut self,
        h: &SimpleGraph,
        comp: &[VertexId],
    ) -> Result<ComponentRoot, Vec<VertexId>> {
        let order = bfs_order(h, comp[0], comp.len());
        for (k, &v) in order.iter().enumerate() {
            self.pos[v] = k;
        }
        let mut candidates = vec![Partial {
            stars: vec![vec![0], vec![0]],
            ends: vec![(0, 1)],
        }];
        let mut earlier = Vec::new();
        for (k, &v) in order.iter().enumerate().skip(1) {
            earlier.clear();
            earlier.extend(
                h.neighbors(v)
                    .iter()
                    .map(|&w| self.pos[w])
                    .filter(|&p| p < k),
            );
            for &s in &earlier {
                self.stamp[s] = k + 1;
            }
            let mut next = Vec::new();
            for cand in &candidates {
                for (x, y) in self.options(cand, k, &earlier) {
                    let mut grown = cand.clone();
                    grown.push(k, x, y);
                    next.push(grown);
                }
            }
            if next.len() > 1 {
                let mut seen = Vec::new();
                next.retain(|p| {
                    let f: Vec<Vec<usize>> = p.family().into_iter().cloned().collect();
                    if seen.contains(&f) {
                        false
                    } else {
                        seen.push(f);
                        true
                    }
                });
            }
            if next.is_empty() {
                return Err(order[..=k].to_vec());
            }
            candidates = next;
        }
        for k in 0..order.len() {
            self.stamp[k] = 0;
        }

        let is_triangle = order.len() == 3 && order.iter().all(|&v| h.degree(v) == 2);
        // Star roots (4 vertices) sort before the triangle (3 vertices).
        candidates.sort_by(|a, b| {
            b.stars
                .len()
                .cmp(&a.stars.len())
                .then(a.family().cmp(&b.family()))
        });
        candidates.truncate(if is_triangle { 2 } else { 1 });

        let mut vertices = comp.to_vec();
        vertices.sort_unstable();
        let candidates = candidates
            .into_iter()
            .map(|p| {
                // Renumber root vertices by first appearance in vertex order.
                let mut rename = vec![usize::MAX; p.stars.len()];
                let mut next = 0;
                let ends = vertices
                    .iter()
                    .map(|&v| {
                        let (a, b) = p.ends[self.pos[v]];
                        let mut name = |x: usize| {
                            if rename[x] == usize::MAX {
                                rename[x] = next;
                                next += 1;
                            }
                            rename[x]
                        };
                        let a = name(a);
                        (a, name(b))
                    })
                    .collect();
                LocalRoot {
                    n_vertices: next,
                    ends,
                }
            })
            .collect();
        Ok(ComponentRoot {
            vertices,
            candidates,
        })
    }

    /// Root vertex pairs `(x, y)` where the new edge may go; `y = None`
    /// means a fresh root vertex. The edges touching `x` or `y` must be
    /// exactly `earlier`.
    fn options(&self, cand: &Partial, k: usize, earlier: &[usize]) -> Vec<(usize, Option<usize>)> {
        let marked = |e: usize| self.stamp[e] == k + 1;
        let mut out: Vec<(usize, Option<usize>)> = Vec::new();
        let (p, q) = cand.ends[earlier[0]];
        for x in [p, q] {
            let star_x = &cand.stars[x];
            if !star_x.iter().all(|&e| marked(e)) {
                continue;
            }
            let rest = earlier.len() - star_x.len();
            if rest == 0 {
                out.push((x, None));
                continue;
            }
            let t = *earlier
                .iter()
                .find(|&&e| !cand.touches(e, x))
                .expect("rest > 0");
            let (a, b) = cand.ends[t];
            for y in [a, b] {
                let star_y = &cand.stars[y];
                if y != x
                    && star_y.len() == rest
                    && star_y.iter().all(|&e| marked(e) && !cand.touches(e, x))
                {
                    let pair = (x.min(y), Some(x.max(y)));
                    if !out.contains(&pair) {
                        out.push(pair);
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn bfs_order(h: &SimpleGraph, start: VertexId, size: usize) -> Vec<VertexId> {
    let mut order = Vec::with_capacity(size);
    let mut seen = std::collections::HashSet::with_capacity(size);
    order.push(start);
    seen.insert(start);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in h.neighbors(u) {
            if seen.insert(w) {
                order.push(w);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn mg(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn line_graph_examples() {
        let star = mg(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(line_graph(&star).graph, SimpleGraph::complete(3));
        assert_eq!(
            line_graph(&mg(3, &[(0, 1), (1, 2)])).graph,
            SimpleGraph::path(2)
        );
        let parallel = mg(2, &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(line_graph(&parallel).graph, SimpleGraph::complete(3));
    }

    #[test]
    fn power_examples() {
        assert_eq!(
            graph_power(&SimpleGraph::path(3), 2).unwrap(),
            SimpleGraph::complete(3)
        );
        let c6 = SimpleGraph::cycle(6);
        assert_eq!(graph_power(&c6, 1).unwrap(), c6);
        let sq = graph_power(&c6, 2).unwrap();
        assert!((0..6).all(|v| sq.degree(v) == 4));
        assert_eq!(graph_power(&c6, 0), Err(LineGraphError::ZeroPower));
    }

    #[test]
    fn edge_distance_examples() {
        let p4 = SimpleGraph::path(4);
        assert_eq!(edge_distance(&p4, (0, 1), (1, 2)).unwrap(), Some(0));
        assert_eq!(edge_distance(&p4, (0, 1), (2, 3)).unwrap(), Some(1));
        let two = SimpleGraph::path(2).disjoint_union(&SimpleGraph::path(2));
        assert_eq!(edge_distance(&two, (0, 1), (2, 3)).unwrap(), None);
        assert_eq!(
            edge_distance(&p4, (0, 2), (2, 3)),
            Err(LineGraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn conflict_graph_examples() {
        let p4 = mg(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(conflict_graph(&p4, 1).unwrap().graph, SimpleGraph::path(3));
        assert_eq!(
            conflict_graph(&p4, 2).unwrap().graph,
            SimpleGraph::complete(3)
        );
        let star = mg(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            conflict_graph(&star, 1).unwrap().graph,
            SimpleGraph::complete(3)
        );
    }

    #[test]
    fn recognizes_triangle_with_both_roots() {
        let r = recognize_line_graph(&SimpleGraph::complete(3)).unwrap();
        assert_eq!(r.root.n_vertices(), 4, "star root comes first");
        let comp = &r.components[0];
        assert_eq!(comp.candidates.len(), 2);
        assert_eq!(comp.candidates[1].n_vertices, 3);
    }

    #[test]
    fn rejects_claw_with_claw_witness() {
        let err = recognize_line_graph(&SimpleGraph::star(3)).unwrap_err();
        assert_eq!(err.witness.entry.as_deref(), Some("G1"));
        assert_eq!(err.witness.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn path_and_cycle_roots() {
        let r = recognize_line_graph(&SimpleGraph::path(3)).unwrap();
        assert_eq!(r.root.n_edges(), 3);
        assert!(is_isomorphic(&r.root.to_simple(), &SimpleGraph::path(4)).is_some());
        let r = recognize_line_graph(&SimpleGraph::cycle(6)).unwrap();
        assert!(is_isomorphic(&r.root.to_simple(), &SimpleGraph::cycle(6)).is_some());
        assert_eq!(line_graph(&r.root).graph, SimpleGraph::cycle(6));
    }

    #[test]
    fn degenerate_inputs() {
        let r = recognize_line_graph(&SimpleGraph::new(0)).unwrap();
        assert_eq!((r.root.n_vertices(), r.root.n_edges()), (0, 0));
        let r = recognize_line_graph(&SimpleGraph::new(1)).unwrap();
        assert_eq!((r.root.n_vertices(), r.root.n_edges()), (2, 1));
    }

    #[test]
    fn disconnected_input_gives_disjoint_roots() {
        let g = SimpleGraph::cycle(5).disjoint_union(&SimpleGraph::path(2));
        let r = recognize_line_graph(&g).unwrap();
        assert_eq!(line_graph(&r.root).graph, g);
        assert_eq!(r.components.len(), 2);
    }
}
