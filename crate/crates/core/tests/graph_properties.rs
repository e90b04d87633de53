mod common;

use common::*;
use linemg::forbidden::{enumerate_connected, load_catalog, scan};
use linemg::graph::{
    find_induced, is_isomorphic, parse_graph, serialize_graph, true_twin_classes, Multigraph,
    SimpleGraph, Weight,
};
use linemg::linegraph::{conflict_graph, graph_power, line_graph, recognize_line_graph};
use proptest::prelude::*;

fn arb_simple(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..=8).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n, 0i64..50, 1i64..5), 0..20).prop_map(move |es| {
            let mut g = Multigraph::new(n);
            for (u, v, p, q) in es {
                if u != v {
                    g.add_weighted_edge(u, v, Weight::new(p, q)).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn twin_classes_match_pairwise_checks(g in arb_simple(9)) {
        let classes = true_twin_classes(&g);
        let mut class_of = vec![usize::MAX; g.n_vertices()];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                prop_assert_eq!(class_of[v], usize::MAX);
                class_of[v] = c;
            }
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    prop_assert!(g.has_edge(a, b));
                }
            }
        }
        let closed = |v: usize| {
            let mut ns = g.neighbors(v).to_vec();
            ns.push(v);
            ns.sort_unstable();
            ns
        };
        for u in 0..g.n_vertices() {
            for v in u + 1..g.n_vertices() {
                let twins = g.has_edge(u, v) && closed(u) == closed(v);
                prop_assert_eq!(twins, class_of[u] == class_of[v]);
            }
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(a in arb_simple(7), b in arb_simple(7), seed in any::<u64>()) {
        prop_assert!(is_isomorphic(&a, &a).is_some());
        prop_assert_eq!(is_isomorphic(&a, &b).is_some(), is_isomorphic(&b, &a).is_some());
        prop_assert_eq!(is_isomorphic(&a, &b).is_some(), brute_isomorphic(&a, &b));
        let mut perm: Vec<usize> = (0..a.n_vertices()).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut rng(seed));
        let shuffled = relabel(&a, &perm);
        let iso = is_isomorphic(&a, &shuffled);
        prop_assert!(iso.is_some());
        prop_assert!(iso.unwrap().is_induced(&shuffled, &a));
    }

    #[test]
    fn find_induced_matches_subset_enumeration(host in arb_simple(7), pattern in arb_simple(4)) {
        let found = find_induced(&host, &pattern);
        prop_assert_eq!(found.is_some(), brute_contains_induced(&host, &pattern));
        if let Some(emb) = found {
            prop_assert!(emb.is_induced(&host, &pattern));
        }
    }

    #[test]
    fn parse_inverts_serialize(g in arb_multigraph()) {
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn one_hop_conflict_graph_is_the_line_graph(g in arb_multigraph()) {
        prop_assert_eq!(conflict_graph(&g, 1).unwrap(), line_graph(&g));
    }

    #[test]
    fn graph_power_is_monotone(g in arb_simple(10), t in 1usize..5) {
        let a = graph_power(&g, t).unwrap();
        let b = graph_power(&g, t + 1).unwrap();
        prop_assert!(a.edges().all(|(u, v)| b.has_edge(u, v)));
        prop_assert!(g.edges().all(|(u, v)| a.has_edge(u, v)));
    }
}

#[test]
fn recognizer_round_trips_random_line_graphs() {
    let mut r = rng(11);
    for _ in 0..1000 {
        let g = random_multigraph(&mut r, 15, 30);
        let simple = g.to_simple();
        let edges: Vec<_> = simple.edges().collect();
        let lg = line_graph(&Multigraph::from_edges(simple.n_vertices(), &edges).unwrap()).graph;
        let root = recognize_line_graph(&lg).expect("line graph of a simple graph");
        assert_eq!(line_graph(&root.root).graph, lg);
        assert!(root.root.is_simple());
    }
}

#[test]
fn beineke_agreement_on_small_graphs() {
    let beineke = load_catalog("beineke9").unwrap();
    let graphs = enumerate_connected(6).unwrap();
    assert_eq!(graphs.iter().filter(|g| g.n_vertices() == 6).count(), 112);
    for g in &graphs {
        let recognized = recognize_line_graph(g);
        assert_eq!(recognized.is_ok(), scan(g, &beineke).is_empty(), "{g:?}");
        if let Ok(root) = recognized {
            assert_eq!(line_graph(&root.root).graph, *g);
        }
    }
}
