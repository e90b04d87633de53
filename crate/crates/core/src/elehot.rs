//! Recognition of line graphs of multigraphs, with root reconstruction.
//!
//! The procedure has three steps:
//!
//! 1. Contract every class of true twins of the input `gc` into one vertex
//!    of a contracted graph `h`, weighted by the class size.
//! 2. Find a simple root of `h` with the line-graph recognizer.
//! 3. Replace the root edge of each `h` vertex by as many parallel edges as
//!    its weight, handing one replica to each member of the twin class.
//!
//! Parallel edges of a root are exactly true twins in its line graph, so `h`
//! is twin-free and `gc` has a multigraph root iff `h` has a simple one. The
//! result is checked edge-for-edge against `gc` before it is returned.

use std::sync::OnceLock;

use thiserror::Error;

use crate::forbidden::{self, Catalog};
use crate::graph::{connected_components, true_twin_classes, Multigraph, SimpleGraph, VertexId};
use crate::linegraph::{
    bfs_order, identify, minimize_obstruction, root_components, ComponentRoot, LineRoot,
    VertexEdgeMap, Witness,
};

/// Output of twin contraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// True-twin classes; class `i` becomes vertex `i` of `h`.
    pub classes: Vec<Vec<VertexId>>,
    /// Contracted, twin-free graph.
    pub h: SimpleGraph,
    /// Class sizes, i.e. the multiplicity each `h` vertex needs in the root.
    pub weights: Vec<usize>,
    /// `class_map[v]` is the `h` vertex containing `gc` vertex `v`.
    pub class_map: Vec<VertexId>,
}

/// A multigraph root of `gc`: `map` pairs `gc` vertices with root edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootResult {
    pub root: Multigraph,
    pub map: VertexEdgeMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElehotError {
    #[error("not a line multigraph (witness {0:?})")]
    NotLineMultigraph(Witness),
    /// Postcondition failure; indicates a bug rather than bad input.
    #[error("reconstructed root does not reproduce the input graph")]
    RootMismatch,
}

pub fn contract_twins(gc: &SimpleGraph) -> TwinPartition {
    let classes = true_twin_classes(gc);
    let mut class_map = vec![0; gc.n_vertices()];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            class_map[v] = c;
        }
    }
    // Twins share neighborhoods, so one representative fixes the class's
    // adjacency.
    let adj = classes
        .iter()
        .enumerate()
        .map(|(c, class)| {
            let mut ns: Vec<VertexId> = gc
                .neighbors(class[0])
                .iter()
                .map(|&w| class_map[w])
                .filter(|&d| d != c)
                .collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    let weights = classes.iter().map(Vec::len).collect();
    TwinPartition {
        h: SimpleGraph::from_sorted_adjacency(adj),
        weights,
        class_map,
        classes,
    }
}

/// Replicates the root edge of every `h` vertex once per member of its twin
/// class. Root edge `v` belongs to `gc` vertex `v`, so replicas go to class
/// members in ascending id order.
pub fn expand_root(h_root: &Multigraph, map_h: &VertexEdgeMap, tp: &TwinPartition) -> RootResult {
    let mut root = Multigraph::new(h_root.n_vertices());
    for &c in &tp.class_map {
        let (a, b) = h_root.edge(map_h.edge_of(c)).endpoints();
        root.add_edge(a, b).expect("h root is loop-free");
    }
    RootResult {
        map: VertexEdgeMap::identity(root.n_edges()),
        root,
    }
}

/// Exact check that the line graph of `rr.root`, read through `rr.map`,
/// is `gc`.
pub fn verify_root(gc: &SimpleGraph, rr: &RootResult) -> bool {
    let n = gc.n_vertices();
    if rr.root.n_edges() != n || rr.map.len() != n {
        return false;
    }
    let incidence = rr.root.incidence();
    let mut row = Vec::new();
    (0..n).all(|v| {
        let e = rr.map.edge_of(v);
        let (a, b) = rr.root.edge(e).endpoints();
        row.clear();
        row.extend(
            incidence[a]
                .iter()
                .chain(&incidence[b])
                .filter(|&&f| f != e)
                .map(|&f| rr.map.vertex_of(f)),
        );
        row.sort_unstable();
        row.dedup();
        row == gc.neighbors(v)
    })
}

/// Reconstructs a multigraph root of `gc`, or explains why none exists.
///
/// The witness is a minimal obstruction found in the contracted graph and
/// lifted to `gc` by taking the smallest member of each twin class; it is
/// named after the matching `multigraph7` catalog entry.
pub fn elehot(gc: &SimpleGraph) -> Result<RootResult, ElehotError> {
    let tp = contract_twins(gc);
    let components = match root_components(&tp.h) {
        Ok(c) => c,
        Err(prefix) => return Err(ElehotError::NotLineMultigraph(witness(gc, &tp, &prefix))),
    };
    let choice: Vec<usize> = components
        .iter()
        .map(|comp| {
            (0..comp.candidates.len())
                .find(|&k| !comp.is_ambiguous() || component_verifies(gc, &tp, comp, k))
                .unwrap_or(0)
        })
        .collect();
    let h_root = LineRoot::with_choices(&components, &choice, tp.h.n_vertices());
    let rr = expand_root(&h_root.root, &h_root.map, &tp);
    if verify_root(gc, &rr) {
        Ok(rr)
    } else {
        Err(ElehotError::RootMismatch)
    }
}

/// Membership test without witness or verification.
pub fn is_line_multigraph(g: &SimpleGraph) -> bool {
    root_components(&contract_twins(g).h).is_ok()
}

/// Checks candidate `k` of one ambiguous (triangle) component after
/// expansion, on the `gc` vertices of that component only.
fn component_verifies(
    gc: &SimpleGraph,
    tp: &TwinPartition,
    comp: &ComponentRoot,
    k: usize,
) -> bool {
    let local = &comp.candidates[k];
    let members: Vec<(VertexId, (usize, usize))> = comp
        .vertices
        .iter()
        .zip(&local.ends)
        .flat_map(|(&c, &ends)| tp.classes[c].iter().map(move |&v| (v, ends)))
        .collect();
    let mut at: Vec<Vec<VertexId>> = vec![Vec::new(); local.n_vertices];
    for &(v, (a, b)) in &members {
        at[a].push(v);
        at[b].push(v);
    }
    members.iter().all(|&(v, (a, b))| {
        let mut row: Vec<VertexId> = at[a]
            .iter()
            .chain(&at[b])
            .copied()
            .filter(|&w| w != v)
            .collect();
        row.sort_unstable();
        row.dedup();
        row == gc.neighbors(v)
    })
}

fn multigraph7() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| forbidden::load_catalog("multigraph7").expect("bundled catalog"))
}

fn witness(gc: &SimpleGraph, tp: &TwinPartition, failed_prefix: &[VertexId]) -> Witness {
    let h = &tp.h;
    // The failing component is twin-free, so it has no multigraph root
    // either. Find the shortest failing BFS prefix, then shrink it.
    let start = failed_prefix[0];
    let comp_len = connected_components(h)
        .into_iter()
        .find(|c| c.binary_search(&start).is_ok())
        .map_or(0, |c| c.len());
    let order = bfs_order(h, start, comp_len);
    let fails = |len: usize| !is_line_multigraph(&h.induced_subgraph(&order[..len]));
    let (mut lo, mut hi) = (1, order.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if fails(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let minimal = minimize_obstruction(h, order[..lo].to_vec(), is_line_multigraph);
    let lifted: Vec<VertexId> = minimal.iter().map(|&c| tp.classes[c][0]).collect();
    identify(gc, lifted, multigraph7())
}
