//! Exhaustive search, used as a reference for the fast paths.

use super::{scale_to_integers, Matching, MatchingError};
use crate::graph::{EdgeId, Multigraph, SimpleGraph, VertexId, Weight};

/// The search visits matchings rather than edge subsets, so this covers `K7`.
pub const MWM_MAX_EDGES: usize = 24;
pub const MWIS_MAX_VERTICES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    /// Vertex ids in ascending order.
    pub vertices: Vec<VertexId>,
    pub weight: Weight,
}

/// Maximum-weight matching by enumerating every matching. Among optimal
/// matchings the lexicographically smallest edge list is returned.
pub fn brute_force_mwm(g: &Multigraph) -> Result<Matching, MatchingError> {
    if g.n_edges() > MWM_MAX_EDGES {
        return Err(MatchingError::TooLarge {
            what: "edges",
            max: MWM_MAX_EDGES,
            got: g.n_edges(),
        });
    }
    let weights = scale_to_integers(&g.edges().iter().map(|e| e.weight).collect::<Vec<_>>());
    let mut best = (0i128, Vec::new());
    let mut chosen = Vec::new();
    let mut used = vec![false; g.n_vertices()];
    mwm_rec(g, &weights, 0, 0, &mut used, &mut chosen, &mut best);
    let edges = best.1;
    let weight = edges.iter().map(|&e| g.edge(e).weight).sum();
    Ok(Matching { edges, weight })
}

fn mwm_rec(
    g: &Multigraph,
    w: &[i128],
    k: usize,
    acc: i128,
    used: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    best: &mut (i128, Vec<EdgeId>),
) {
    if k == g.n_edges() {
        if acc > best.0 || (acc == best.0 && *chosen < best.1) {
            *best = (acc, chosen.clone());
        }
        return;
    }
    let (a, b) = g.edge(k).endpoints();
    if !used[a] && !used[b] {
        used[a] = true;
        used[b] = true;
        chosen.push(k);
        mwm_rec(g, w, k + 1, acc + w[k], used, chosen, best);
        chosen.pop();
        used[a] = false;
        used[b] = false;
    }
    mwm_rec(g, w, k + 1, acc, used, chosen, best);
}

/// Maximum-weight independent set by branch and bound over vertices,
/// using the graph's vertex weights (default 1). Among optimal sets the
/// lexicographically smallest sorted vertex list is returned.
pub fn brute_force_mwis(g: &SimpleGraph) -> Result<IndependentSet, MatchingError> {
    let n = g.n_vertices();
    if n > MWIS_MAX_VERTICES {
        return Err(MatchingError::TooLarge {
            what: "vertices",
            max: MWIS_MAX_VERTICES,
            got: n,
        });
    }
    let weights = scale_to_integers(&(0..n).map(|v| g.vertex_weight(v)).collect::<Vec<_>>());
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut suffix = vec![0i128; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] + weights[v];
    }
    let mut s = Mwis {
        weights,
        nbr,
        suffix,
        best_w: -1,
        best: Vec::new(),
        cur: Vec::new(),
    };
    s.rec(0, 0, 0);
    let weight = s.best.iter().map(|&v| g.vertex_weight(v)).sum();
    Ok(IndependentSet {
        vertices: s.best,
        weight,
    })
}

struct Mwis {
    weights: Vec<i128>,
    nbr: Vec<u32>,
    suffix: Vec<i128>,
    best_w: i128,
    best: Vec<VertexId>,
    cur: Vec<VertexId>,
}

impl Mwis {
    fn rec(&mut self, v: usize, blocked: u32, acc: i128) {
        if acc + self.suffix[v] < self.best_w {
            return;
        }
        if v == self.weights.len() {
            // Pruning guarantees acc >= best_w here.
            if acc > self.best_w || self.cur < self.best {
                self.best_w = acc;
                self.best = self.cur.clone();
            }
            return;
        }
        if blocked >> v & 1 == 0 {
            self.cur.push(v);
            self.rec(v + 1, blocked | self.nbr[v], acc + self.weights[v]);
            self.cur.pop();
        }
        self.rec(v + 1, blocked, acc);
    }
}
