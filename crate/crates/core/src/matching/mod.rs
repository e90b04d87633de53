//! Maximum-weight matching in multigraphs, plus exhaustive oracles for
//! matchings and independent sets.

mod blossom;
mod brute;

pub use brute::{
    brute_force_mwis, brute_force_mwm, IndependentSet, MWIS_MAX_VERTICES, MWM_MAX_EDGES,
};

use std::collections::HashMap;

use num_integer::Integer;
use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, VertexId, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("input has {got} {what}, limit is {max}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },
}

/// A set of edges, no two sharing an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Edge ids in ascending order.
    pub edges: Vec<EdgeId>,
    pub weight: Weight,
}

impl Matching {
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        let mut used = vec![false; g.n_vertices()];
        self.edges.iter().all(|&e| {
            e < g.n_edges() && {
                let (a, b) = g.edge(e).endpoints();
                !std::mem::replace(&mut used[a], true) && !std::mem::replace(&mut used[b], true)
            }
        })
    }
}

/// A multigraph reduced to one edge per joined vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedReduction {
    /// Simple weighted graph; edge `i` stands for original edge `survivor[i]`.
    pub simple: Multigraph,
    pub survivor: Vec<EdgeId>,
}

/// Keeps the heaviest edge of every parallel class (smallest id on ties).
/// Kept edges appear in order of their class's first edge.
pub fn reduce_multigraph(g: &Multigraph) -> WeightedReduction {
    let mut slot: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut survivor: Vec<EdgeId> = Vec::new();
    for e in g.edges() {
        match slot.get(&e.key()) {
            Some(&i) => {
                if e.weight > g.edge(survivor[i]).weight {
                    survivor[i] = e.id;
                }
            }
            None => {
                slot.insert(e.key(), survivor.len());
                survivor.push(e.id);
            }
        }
    }
    let mut simple = Multigraph::new(g.n_vertices());
    for &id in &survivor {
        let e = g.edge(id);
        simple
            .add_weighted_edge(e.u, e.v, e.weight)
            .expect("edge copied from a valid graph");
    }
    WeightedReduction { simple, survivor }
}

/// Exact maximum-weight matching of a weighted multigraph, by the blossom
/// algorithm on its heaviest-edge reduction. Zero-weight edges are never
/// chosen.
pub fn max_weight_matching(g: &Multigraph) -> Matching {
    let red = reduce_multigraph(g);
    let weights: Vec<Weight> = red.simple.edges().iter().map(|e| e.weight).collect();
    let scaled = scale_to_integers(&weights);
    let input: Vec<(usize, usize, i128)> = red
        .simple
        .edges()
        .iter()
        .zip(&scaled)
        .filter(|(_, &w)| w > 0)
        .map(|(e, &w)| (e.u, e.v, w))
        .collect();
    let kept: Vec<EdgeId> = red
        .simple
        .edges()
        .iter()
        .zip(&scaled)
        .filter(|(_, &w)| w > 0)
        .map(|(e, _)| red.survivor[e.id])
        .collect();
    let mate = blossom::max_weight_matching(g.n_vertices(), &input);
    let mut edges: Vec<EdgeId> = input
        .iter()
        .zip(&kept)
        .filter(|((u, v, _), _)| mate[*u] == Some(*v))
        .map(|(_, &id)| id)
        .collect();
    edges.sort_unstable();
    let weight = edges.iter().map(|&e| g.edge(e).weight).sum();
    Matching { edges, weight }
}

/// Multiplies every weight by the lcm of the denominators.
pub(crate) fn scale_to_integers(weights: &[Weight]) -> Vec<i128> {
    let lcm = weights
        .iter()
        .fold(1i128, |acc, w| acc.lcm(&(*w.denom() as i128)));
    weights
        .iter()
        .map(|w| *w.numer() as i128 * (lcm / *w.denom() as i128))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weighted(n: usize, edges: &[(usize, usize, i64)]) -> Multigraph {
        let mut g = Multigraph::new(n);
        for &(u, v, w) in edges {
            g.add_weighted_edge(u, v, Weight::from_integer(w)).unwrap();
        }
        g
    }

    #[test]
    fn reduction_keeps_heaviest() {
        let g = weighted(2, &[(0, 1, 5), (0, 1, 3), (1, 0, 2)]);
        let r = reduce_multigraph(&g);
        assert_eq!(r.survivor, vec![0]);
        assert_eq!(r.simple.edge(0).weight, Weight::from_integer(5));

        let g = weighted(3, &[(0, 1, 2), (1, 2, 7), (1, 0, 2)]);
        let r = reduce_multigraph(&g);
        assert_eq!(r.survivor, vec![0, 1]);

        let g = weighted(4, &[(0, 1, 1), (1, 2, 4), (2, 3, 2)]);
        let r = reduce_multigraph(&g);
        assert_eq!(r.survivor, vec![0, 1, 2]);
        assert_eq!(r.simple, g);
    }

    #[test]
    fn matching_examples() {
        let k3 = weighted(3, &[(0, 1, 5), (1, 2, 3), (0, 2, 2)]);
        let m = max_weight_matching(&k3);
        assert_eq!(
            (m.edges.clone(), m.weight),
            (vec![0], Weight::from_integer(5))
        );

        let p4 = weighted(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 2)]);
        let m = max_weight_matching(&p4);
        assert_eq!(m.edges, vec![0, 2]);
        assert_eq!(m.weight, Weight::from_integer(5));

        let c4 = weighted(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        assert_eq!(max_weight_matching(&c4).weight, Weight::from_integer(2));
        assert!(max_weight_matching(&Multigraph::new(3)).edges.is_empty());
    }

    #[test]
    fn parallel_edges_use_the_heaviest() {
        let g = weighted(3, &[(0, 1, 1), (0, 1, 4), (1, 2, 3)]);
        let m = max_weight_matching(&g);
        assert_eq!(m.edges, vec![1]);
        assert!(m.is_valid_for(&g));
    }

    #[test]
    fn rational_weights() {
        let mut g = Multigraph::new(3);
        g.add_weighted_edge(0, 1, Weight::new(1, 3)).unwrap();
        g.add_weighted_edge(1, 2, Weight::new(1, 2)).unwrap();
        let m = max_weight_matching(&g);
        assert_eq!(m.weight, Weight::new(1, 2));
    }

    #[test]
    fn blossom_needed() {
        // Odd cycle with a pendant edge: the optimum uses the blossom.
        let g = weighted(
            6,
            &[
                (0, 1, 6),
                (1, 2, 6),
                (2, 0, 6),
                (2, 3, 5),
                (0, 4, 5),
                (1, 5, 5),
            ],
        );
        let m = max_weight_matching(&g);
        assert_eq!(m.weight, brute_force_mwm(&g).unwrap().weight);
        assert!(m.is_valid_for(&g));
    }
}
