mod common;

use common::*;
use linemg::graph::{Multigraph, Weight};
use linemg::linegraph::line_graph;
use linemg::matching::brute_force_mwis;
use linemg::scheduler::{build_pipeline, schedule_slot, simulate, Mode, Pipeline, Policy};
use rand::Rng;

fn independent_in_gc(p: &Pipeline, links: &[usize]) -> bool {
    let vs: Vec<usize> = links.iter().map(|&l| p.gc.map.vertex_of(l)).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !p.gc.graph.has_edge(a, b)))
}

fn mwis_weight(p: &Pipeline, queues: &[u64]) -> u64 {
    let w = (0..p.n_links())
        .map(|v| Weight::from_integer(queues[p.gc.map.edge_of(v)] as i64))
        .collect();
    let g = p.gc.graph.clone().with_vertex_weights(w).unwrap();
    *brute_force_mwis(&g).unwrap().weight.numer() as u64
}

#[test]
fn root_matching_schedules_are_maximum_weight() {
    let mut r = rng(41);
    let mut checked = 0;
    while checked < 300 {
        let net = random_multigraph(&mut r, 8, 14);
        if net.n_edges() == 0 {
            continue;
        }
        let hops = if checked % 3 == 0 { 2 } else { 1 };
        let p = build_pipeline(&net, hops, Policy::Auto).unwrap();
        if !matches!(p.mode, Mode::RootMwm(_)) {
            continue;
        }
        for _ in 0..3 {
            let q: Vec<u64> = (0..net.n_edges()).map(|_| r.gen_range(0..30)).collect();
            let s = schedule_slot(&p, &q).unwrap();
            assert!(independent_in_gc(&p, &s.links));
            assert_eq!(s.weight, mwis_weight(&p, &q), "{net:?} {q:?}");
            assert!(s.links.iter().all(|&l| q[l] > 0));
        }
        checked += 1;
    }
}

#[test]
fn parallel_links_schedule_a_longest_queue() {
    let mut r = rng(42);
    for _ in 0..200 {
        let net = random_multigraph(&mut r, 6, 12);
        let p = build_pipeline(&net, 1, Policy::Auto).unwrap();
        let q: Vec<u64> = (0..net.n_edges()).map(|_| r.gen_range(1..20)).collect();
        let s = schedule_slot(&p, &q).unwrap();
        for &l in &s.links {
            let key = net.edge(l).key();
            assert!(net
                .edges()
                .iter()
                .filter(|e| e.key() == key)
                .all(|e| q[e.id] <= q[l]));
        }
    }
}

#[test]
fn every_mode_schedules_independent_sets_in_every_slot() {
    let mut r = rng(43);
    for i in 0..40 {
        let net = random_multigraph(&mut r, 7, 12);
        for policy in [Policy::Auto, Policy::Exact, Policy::Greedy] {
            let p = build_pipeline(&net, 1 + i % 2, policy).unwrap();
            let rates: Vec<f64> = (0..net.n_edges()).map(|_| r.gen_range(0.0..0.6)).collect();
            let log = simulate(&p, &rates, 300, i as u64).unwrap();
            for rec in &log.records {
                assert!(independent_in_gc(&p, &rec.scheduled));
            }
            if !matches!(p.mode, Mode::Greedy) {
                let exact = build_pipeline(&net, 1 + i % 2, Policy::Exact).unwrap();
                let q: Vec<u64> = (0..net.n_edges()).map(|_| r.gen_range(0..9)).collect();
                assert_eq!(
                    schedule_slot(&p, &q).unwrap().weight,
                    schedule_slot(&exact, &q).unwrap().weight
                );
            }
        }
    }
}

#[test]
fn simulations_are_reproducible() {
    let net = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 2)]).unwrap();
    let p = build_pipeline(&net, 2, Policy::Auto).unwrap();
    let rates = [0.1, 0.2, 0.15, 0.3, 0.05];
    assert_eq!(
        simulate(&p, &rates, 2000, 5).unwrap(),
        simulate(&p, &rates, 2000, 5).unwrap()
    );
    assert_ne!(
        simulate(&p, &rates, 2000, 5).unwrap(),
        simulate(&p, &rates, 2000, 6).unwrap()
    );
}

#[test]
fn line_graph_networks_are_recognized_at_one_hop() {
    let mut r = rng(44);
    for _ in 0..100 {
        let net = random_multigraph(&mut r, 9, 16);
        let p = build_pipeline(&net, 1, Policy::Auto).unwrap();
        assert!(matches!(p.mode, Mode::RootMwm(_)));
        assert_eq!(p.gc.graph, line_graph(&net).graph);
    }
}
