use super::{Embedding, SimpleGraph, VertexId};

/// Finds an induced copy of `pattern` in `host`.
///
/// Backtracking assigns pattern vertices in index order, trying host
/// vertices in increasing id order, so the embedding returned is the
/// lexicographically first one. Intended for small patterns (at most 8
/// vertices); the search is exponential in the pattern size.
pub fn find_induced(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Embedding> {
    let k = pattern.n_vertices();
    if k > host.n_vertices() {
        return None;
    }
    // For each pattern vertex, its earliest neighbor among lower indices;
    // host candidates can then be drawn from that neighbor's image.
    let anchor: Vec<Option<VertexId>> = (0..k)
        .map(|i| pattern.neighbors(i).first().copied().filter(|&j| j < i))
        .collect();
    let mut state = Search {
        host,
        pattern,
        anchor,
        mapping: Vec::with_capacity(k),
        used: vec![false; host.n_vertices()],
    };
    state.extend().then_some(Embedding {
        mapping: state.mapping,
    })
}

struct Search<'a> {
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    anchor: Vec<Option<VertexId>>,
    mapping: Vec<VertexId>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let i = self.mapping.len();
        if i == self.pattern.n_vertices() {
            return true;
        }
        let candidates: Vec<VertexId> = match self.anchor[i] {
            Some(j) => self.host.neighbors(self.mapping[j]).to_vec(),
            None => (0..self.host.n_vertices()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.host.degree(x) < self.pattern.degree(i) {
                continue;
            }
            let consistent = (0..i)
                .all(|j| self.pattern.has_edge(i, j) == self.host.has_edge(x, self.mapping[j]));
            if !consistent {
                continue;
            }
            self.used[x] = true;
            self.mapping.push(x);
            if self.extend() {
                return true;
            }
            self.mapping.pop();
            self.used[x] = false;
        }
        false
    }
}

/// Returns an isomorphism `g1 -> g2` if one exists. Exhaustive with degree
/// pruning; meant for graphs of up to about 10 vertices.
pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Embedding> {
    if g1.n_vertices() != g2.n_vertices()
        || g1.n_edges() != g2.n_edges()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return None;
    }
    // An induced embedding between graphs of equal order is a bijection
    // preserving adjacency both ways.
    find_induced(g2, g1)
}
