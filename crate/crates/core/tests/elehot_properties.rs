mod common;

use common::*;
use linemg::elehot::{contract_twins, elehot, is_line_multigraph, verify_root, ElehotError};
use linemg::forbidden::{enumerate_connected, krausz_oracle, load_catalog};
use linemg::graph::{find_induced, is_isomorphic, true_twin_classes, SimpleGraph};
use linemg::linegraph::line_graph;

fn four_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() == 4)
        .map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

#[test]
fn contracted_graph_is_twin_free_and_contraction_is_idempotent() {
    let mut r = rng(21);
    for i in 0..1000 {
        let gc = if i % 2 == 0 {
            random_simple(&mut r, 2 + i % 14, 0.4)
        } else {
            random_blowup(&mut r, 2 + i % 7, 0.5)
        };
        let tp = contract_twins(&gc);
        assert!(true_twin_classes(&tp.h).iter().all(|c| c.len() == 1));
        let again = contract_twins(&tp.h);
        assert_eq!(again.h, tp.h);
        assert!(again.weights.iter().all(|&w| w == 1));
        assert_eq!(tp.weights.iter().sum::<usize>(), gc.n_vertices());
    }
}

#[test]
fn induced_four_vertex_patterns_of_h_occur_in_gc() {
    let mut r = rng(22);
    for i in 0..200 {
        let gc = random_blowup(&mut r, 4 + i % 4, 0.5);
        let h = contract_twins(&gc).h;
        for vs in four_subsets(h.n_vertices()) {
            let pattern = h.induced_subgraph(&vs);
            assert!(find_induced(&gc, &pattern).is_some());
        }
    }
}

#[test]
fn roots_of_random_line_multigraphs_verify() {
    let mut r = rng(23);
    for _ in 0..1000 {
        let g = random_multigraph(&mut r, 12, 30);
        let gc = line_graph(&g).graph;
        let rr = elehot(&gc).expect("line graph of a multigraph");
        assert!(verify_root(&gc, &rr));
        assert_eq!(rr.root.n_edges(), gc.n_vertices());
        let mut seen = vec![false; gc.n_vertices()];
        for (v, e) in rr.map.pairs() {
            assert!(!std::mem::replace(&mut seen[e], true));
            assert_eq!(rr.map.vertex_of(e), v);
        }
    }
}

#[test]
fn recognition_agrees_with_clique_cover_and_root_search() {
    for g in enumerate_connected(6).unwrap() {
        let result = elehot(&g);
        let expected = krausz_oracle(&g).unwrap();
        assert_eq!(result.is_ok(), expected, "{g:?}");
        assert_eq!(is_line_multigraph(&g), expected);
        if g.n_vertices() <= 5 {
            assert_eq!(brute_root_exists(&g), expected, "{g:?}");
        }
        match result {
            Ok(rr) => assert!(verify_root(&g, &rr)),
            Err(ElehotError::NotLineMultigraph(w)) => {
                let catalog = load_catalog("multigraph7").unwrap();
                let entry = catalog
                    .get(w.entry.as_deref().expect("named witness"))
                    .unwrap();
                let sub = g.induced_subgraph(&w.vertices);
                assert!(is_isomorphic(&entry.graph, &sub).is_some());
            }
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn witnesses_in_larger_graphs_are_catalog_entries() {
    let catalog = load_catalog("multigraph7").unwrap();
    let mut r = rng(24);
    let mut rejected = 0;
    for i in 0..300 {
        let gc = random_blowup(&mut r, 4 + i % 6, 0.45);
        if let Err(ElehotError::NotLineMultigraph(w)) = elehot(&gc) {
            rejected += 1;
            let entry = catalog
                .get(w.entry.as_deref().expect("named witness"))
                .unwrap();
            let sub = gc.induced_subgraph(&w.vertices);
            // `vertices[i]` is the image of entry vertex `i`.
            for (a, b) in entry.graph.edges() {
                assert!(sub.has_edge(a, b));
            }
            assert_eq!(sub.n_edges(), entry.graph.n_edges());
        }
    }
    assert!(rejected > 50);
}

#[test]
fn triangle_components_keep_both_roots() {
    let k3 = SimpleGraph::complete(3);
    let rr = elehot(&k3).unwrap();
    assert_eq!(rr.root.multiplicity_histogram(), vec![0, 0, 0, 1]);
    // Twin-free triangles inside larger graphs still resolve.
    let two = k3.disjoint_union(&SimpleGraph::cycle(5));
    assert!(verify_root(&two, &elehot(&two).unwrap()));
}
