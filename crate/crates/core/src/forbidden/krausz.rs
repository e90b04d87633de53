//! Clique-cover membership test for line graphs of multigraphs.
//!
//! `g` is the line graph of a loop-free multigraph iff its vertices can be
//! given labels (root vertices) so that each vertex carries at most two
//! labels and two vertices are adjacent exactly when they share a label.
//! Equivalently: a family of cliques covering every edge with each vertex in
//! at most two cliques. The search below is exhaustive.

use super::CatalogError;
use crate::graph::{SimpleGraph, VertexId};

pub const KRAUSZ_MAX_VERTICES: usize = 12;

/// Cliques covering every edge, each vertex in at most two of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub cliques: Vec<Vec<VertexId>>,
}

impl CliqueCover {
    pub fn is_valid_for(&self, g: &SimpleGraph) -> bool {
        let n = g.n_vertices();
        let mut count = vec![0usize; n];
        for c in &self.cliques {
            for (i, &a) in c.iter().enumerate() {
                if a >= n {
                    return false;
                }
                count[a] += 1;
                if c[i + 1..].iter().any(|&b| !g.has_edge(a, b)) {
                    return false;
                }
            }
        }
        count.iter().all(|&c| c <= 2)
            && g.edges().all(|(u, v)| {
                self.cliques
                    .iter()
                    .any(|c| c.contains(&u) && c.contains(&v))
            })
    }
}

pub fn krausz_oracle(g: &SimpleGraph) -> Result<bool, CatalogError> {
    Ok(clique_cover(g)?.is_some())
}

pub fn clique_cover(g: &SimpleGraph) -> Result<Option<CliqueCover>, CatalogError> {
    if g.n_vertices() > KRAUSZ_MAX_VERTICES {
        return Err(CatalogError::TooLarge {
            max: KRAUSZ_MAX_VERTICES,
            got: g.n_vertices(),
        });
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let mut search = Search {
        g,
        edges: &edges,
        labels: vec![Vec::new(); g.n_vertices()],
        cliques: Vec::new(),
    };
    Ok(search.run().then(|| {
        let mut cliques = search.cliques;
        for c in &mut cliques {
            c.sort_unstable();
        }
        cliques.retain(|c| !c.is_empty());
        CliqueCover { cliques }
    }))
}

struct Search<'a> {
    g: &'a SimpleGraph,
    edges: &'a [(VertexId, VertexId)],
    labels: Vec<Vec<usize>>,
    cliques: Vec<Vec<VertexId>>,
}

impl Search<'_> {
    fn covered(&self, u: VertexId, v: VertexId) -> bool {
        self.labels[u].iter().any(|l| self.labels[v].contains(l))
    }

    fn can_join(&self, x: VertexId, clique: usize) -> bool {
        self.labels[x].len() < 2 && self.cliques[clique].iter().all(|&w| self.g.has_edge(x, w))
    }

    fn run(&mut self) -> bool {
        let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| !self.covered(u, v)) else {
            return true;
        };
        // Extend a clique already holding one endpoint.
        for (holder, joiner) in [(u, v), (v, u)] {
            for i in 0..self.labels[holder].len() {
                let c = self.labels[holder][i];
                if self.can_join(joiner, c) {
                    self.cliques[c].push(joiner);
                    self.labels[joiner].push(c);
                    if self.run() {
                        return true;
                    }
                    self.labels[joiner].pop();
                    self.cliques[c].pop();
                }
            }
        }
        // Or open a new clique on the edge.
        if self.labels[u].len() < 2 && self.labels[v].len() < 2 {
            let c = self.cliques.len();
            self.cliques.push(vec![u, v]);
            self.labels[u].push(c);
            self.labels[v].push(c);
            if self.run() {
                return true;
            }
            self.labels[u].pop();
            self.labels[v].pop();
            self.cliques.pop();
        }
        false
    }
}
