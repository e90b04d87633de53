//! Connected graphs up to isomorphism, and derivation of minimal forbidden
//! induced subgraphs.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{krausz_oracle, Catalog, CatalogEntry, CatalogError, Provenance};
use crate::graph::SimpleGraph;

pub const MAX_ENUMERATE: usize = 7;

/// Canonical adjacency bitstring: the smallest upper-triangle bitstring
/// (pairs `(0,1), (0,2), ..., (n-2,n-1)`, most significant first) over all
/// relabelings that order vertices by a refined degree invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalForm {
    pub fn to_graph(self) -> SimpleGraph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        SimpleGraph::from_edges(n, &edges).expect("valid canonical graph")
    }
}

/// Canonical form of a graph with at most 11 vertices.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.n_vertices();
    assert!(n <= 11, "canonical_form supports at most 11 vertices");
    // Invariant per vertex: degree, then sorted neighbor degrees. Vertices
    // may only be permuted within equal-invariant groups.
    let mut keyed: Vec<((usize, Vec<usize>), usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            ((g.degree(v), nd), v)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *key {
            groups.last_mut().unwrap().push(*v);
        } else {
            groups.push(vec![*v]);
        }
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_groups(g, &mut groups, 0, &mut order, &mut best);
    CanonicalForm {
        n: n as u8,
        bits: if n < 2 { 0 } else { best },
    }
}

fn permute_groups(
    g: &SimpleGraph,
    groups: &mut [Vec<usize>],
    gi: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if gi == groups.len() {
        let n = order.len();
        let mut bits = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                bits = bits << 1 | g.has_edge(order[i], order[j]) as u64;
            }
        }
        *best = (*best).min(bits);
        return;
    }
    heap_permutations(groups, gi, groups[gi].len(), g, order, best);
}

/// Heap's algorithm over `groups[gi]`, recursing into the next group for
/// each arrangement.
fn heap_permutations(
    groups: &mut [Vec<usize>],
    gi: usize,
    k: usize,
    g: &SimpleGraph,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if k <= 1 {
        let len = order.len();
        order.extend_from_slice(&groups[gi]);
        permute_groups(g, groups, gi + 1, order, best);
        order.truncate(len);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(groups, gi, k - 1, g, order, best);
        if k.is_multiple_of(2) {
            groups[gi].swap(i, k - 1);
        } else {
            groups[gi].swap(0, k - 1);
        }
    }
    heap_permutations(groups, gi, k - 1, g, order, best);
}

/// One representative per isomorphism class of connected graphs on
/// `1..=max_n` vertices, ordered by vertex count and then canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so each level is produced by attaching a new vertex to a nonempty
/// neighbor set in every graph of the previous level.
pub fn enumerate_connected(max_n: usize) -> Result<Vec<SimpleGraph>, CatalogError> {
    if max_n > MAX_ENUMERATE {
        return Err(CatalogError::TooLarge {
            max: MAX_ENUMERATE,
            got: max_n,
        });
    }
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    let mut level: Vec<CanonicalForm> = vec![CanonicalForm { n: 1, bits: 0 }];
    out.push(SimpleGraph::new(1));
    for n in 2..=max_n {
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                let base = form.to_graph();
                (1u32..1 << (n - 1)).map(move |mask| {
                    let mut g = SimpleGraph::new(n);
                    for (u, v) in base.edges() {
                        g.add_edge(u, v).unwrap();
                    }
                    for u in 0..n - 1 {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, n - 1).unwrap();
                        }
                    }
                    canonical_form(&g)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
        out.extend(level.iter().map(|f| f.to_graph()));
    }
    Ok(out)
}

/// Connected graphs on at most `max_n` vertices that fail the clique-cover
/// test while every one-vertex-deleted subgraph passes it. Membership is
/// hereditary, so this is exactly the set of minimal forbidden induced
/// subgraphs up to that size.
pub fn derive_minimal_forbidden(max_n: usize) -> Result<Catalog, CatalogError> {
    let graphs = enumerate_connected(max_n)?;
    let minimal: Vec<SimpleGraph> = graphs
        .into_par_iter()
        .filter(|g| {
            !krausz_oracle(g).expect("small graph")
                && (0..g.n_vertices())
                    .all(|v| krausz_oracle(&g.remove_vertex(v)).expect("small graph"))
        })
        .collect();
    let entries = minimal
        .into_iter()
        .enumerate()
        .map(|(i, graph)| CatalogEntry {
            name: format!("D{}", i + 1),
            description: Some(format!(
                "{} vertices, {} edges",
                graph.n_vertices(),
                graph.n_edges()
            )),
            graph,
        })
        .collect();
    Ok(Catalog {
        name: format!("derived-{max_n}"),
        provenance: Provenance::Derived,
        entries,
    })
}
