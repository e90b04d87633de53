//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use linemg::graph::{Multigraph, SimpleGraph, VertexId, Weight};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Loop-free multigraph with `2..=max_n` vertices and `0..=max_m` edges.
/// Edges repeat an earlier pair with probability 1/4, so parallel classes
/// are common.
pub fn random_multigraph(rng: &mut impl Rng, max_n: usize, max_m: usize) -> Multigraph {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(0..=max_m);
    let mut g = Multigraph::new(n);
    for _ in 0..m {
        if g.n_edges() > 0 && rng.gen_bool(0.25) {
            let e = g.edge(rng.gen_range(0..g.n_edges())).clone();
            g.add_edge(e.u, e.v).unwrap();
        } else {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Multigraph with exactly `m` edges on `n` vertices, used for sizing.
pub fn random_multigraph_sized(rng: &mut impl Rng, n: usize, m: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    while g.n_edges() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_simple(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random graph that has twins by construction: a base graph whose
/// vertices are blown up into cliques of random size.
pub fn random_blowup(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let base = random_simple(rng, n, p);
    let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut start = vec![0];
    for s in &sizes {
        start.push(start.last().unwrap() + s);
    }
    let mut g = SimpleGraph::new(*start.last().unwrap());
    for v in 0..n {
        for a in start[v]..start[v + 1] {
            for b in a + 1..start[v + 1] {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    for (u, v) in base.edges() {
        for a in start[u]..start[u + 1] {
            for b in start[v]..start[v + 1] {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
    perm.shuffle(rng);
    relabel(&g, &perm)
}

/// `perm[v]` is the new label of `v`.
pub fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    SimpleGraph::from_edges(g.n_vertices(), &edges).unwrap()
}

pub fn random_weights(rng: &mut impl Rng, n: usize, max: i64) -> Vec<Weight> {
    (0..n)
        .map(|_| Weight::from_integer(rng.gen_range(0..=max)))
        .collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let n = a.n_vertices();
    if n != b.n_vertices() || a.n_edges() != b.n_edges() {
        return false;
    }
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(p[u], p[v])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Induced-subgraph containment by trying every vertex subset of the
/// pattern's size.
pub fn brute_contains_induced(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    let n = host.n_vertices();
    let k = pattern.n_vertices();
    if k > n {
        return false;
    }
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let vs: Vec<VertexId> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            brute_isomorphic(&host.induced_subgraph(&vs), pattern)
        })
}

/// Searches for a multigraph root directly: assigns each vertex of `g` an
/// endpoint pair, introducing root vertices in order, and checks adjacency
/// against every earlier vertex. Exponential; meant for graphs with at
/// most six vertices.
pub fn brute_root_exists(g: &SimpleGraph) -> bool {
    fn rec(g: &SimpleGraph, k: usize, ends: &mut Vec<(usize, usize)>, used: usize) -> bool {
        if k == g.n_vertices() {
            return true;
        }
        for a in 0..=used {
            for b in a + 1..=used + 1 {
                let ok = ends.iter().enumerate().all(|(j, &(c, d))| {
                    let share = a == c || a == d || b == c || b == d;
                    share == g.has_edge(j, k)
                });
                if ok {
                    ends.push((a, b));
                    if rec(g, k + 1, ends, used.max(b + 1)) {
                        return true;
                    }
                    ends.pop();
                }
            }
        }
        false
    }
    rec(g, 0, &mut Vec::new(), 0)
}
