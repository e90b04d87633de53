//! MaxWeight link scheduling on M-hop conflict graphs.
//!
//! A [`Pipeline`] builds the conflict graph of a network once and picks how
//! each slot is scheduled. When the conflict graph is a line multigraph the
//! per-slot maximum-weight independent set becomes a maximum-weight
//! matching in its root, which is solved exactly in polynomial time.

mod io;

pub use io::{
    parse_link_values, read_queues, read_rates, write_jsonl, write_link_values, write_slot_csv,
    IoError,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::elehot::{elehot, ElehotError, RootResult};
use crate::graph::{EdgeId, Multigraph, SimpleGraph, VertexId, Weight};
use crate::linegraph::{conflict_graph, LineGraphResult, Witness};
use crate::matching::{brute_force_mwis, max_weight_matching, MWIS_MAX_VERTICES};

/// Largest conflict graph solved by exhaustive search under [`Policy::Auto`].
pub const DEFAULT_EXACT_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchedulerError {
    #[error("hop count must be at least 1")]
    ZeroHops,
    #[error("exact scheduling needs at most {max} links, network has {got}")]
    TooLarge { max: usize, got: usize },
    #[error("got {got} values, network has {expected} links")]
    LinkCount { got: usize, expected: usize },
    #[error("rate {rate} of link {link} is not in [0, 1]")]
    BadRate { link: EdgeId, rate: f64 },
    #[error("slot count must be at least 1")]
    ZeroSlots,
    #[error("root reconstruction failed verification")]
    RootMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// Root matching when possible, else exact or greedy by size.
    Auto,
    Exact,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    RootMwm(RootResult),
    ExactMwis,
    Greedy,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::RootMwm(_) => "ROOT_MWM",
            Mode::ExactMwis => "EXACT_MWIS",
            Mode::Greedy => "GREEDY",
        }
    }
}

/// Network, conflict graph and scheduling mode. Network link `i` is
/// conflict-graph vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline {
    pub network: Multigraph,
    pub hops: usize,
    pub gc: LineGraphResult,
    pub mode: Mode,
    /// Why root matching was not used, when the recognizer said no.
    pub witness: Option<Witness>,
}

impl Pipeline {
    pub fn n_links(&self) -> usize {
        self.network.n_edges()
    }

    /// Root edge serving each network link, in root-matching mode.
    pub fn root_edge_of_link(&self, link: EdgeId) -> Option<EdgeId> {
        match &self.mode {
            Mode::RootMwm(rr) => Some(rr.map.edge_of(self.gc.map.vertex_of(link))),
            _ => None,
        }
    }
}

pub fn build_pipeline(
    network: &Multigraph,
    hops: usize,
    policy: Policy,
) -> Result<Pipeline, SchedulerError> {
    build_pipeline_with_limit(network, hops, policy, DEFAULT_EXACT_LIMIT)
}

/// As [`build_pipeline`], with the exhaustive-search size cutoff for
/// [`Policy::Auto`] given explicitly (capped at the solver's limit).
pub fn build_pipeline_with_limit(
    network: &Multigraph,
    hops: usize,
    policy: Policy,
    exact_limit: usize,
) -> Result<Pipeline, SchedulerError> {
    let gc = conflict_graph(network, hops).map_err(|_| SchedulerError::ZeroHops)?;
    let n = gc.graph.n_vertices();
    let mut witness = None;
    let mode = match policy {
        Policy::Greedy => Mode::Greedy,
        Policy::Exact if n > MWIS_MAX_VERTICES => {
            return Err(SchedulerError::TooLarge {
                max: MWIS_MAX_VERTICES,
                got: n,
            })
        }
        Policy::Exact => Mode::ExactMwis,
        Policy::Auto => match elehot(&gc.graph) {
            Ok(rr) => Mode::RootMwm(rr),
            Err(ElehotError::RootMismatch) => return Err(SchedulerError::RootMismatch),
            Err(ElehotError::NotLineMultigraph(w)) => {
                witness = Some(w);
                if n <= exact_limit.min(MWIS_MAX_VERTICES) {
                    Mode::ExactMwis
                } else {
                    Mode::Greedy
                }
            }
        },
    };
    Ok(Pipeline {
        network: network.clone(),
        hops,
        gc,
        mode,
        witness,
    })
}

/// Links scheduled in one slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schedule {
    /// Link ids in ascending order, all with positive queues.
    pub links: Vec<EdgeId>,
    pub weight: u64,
}

/// Picks a set of mutually non-conflicting links of maximum total queue
/// (exactly in root-matching and exact modes). Links with empty queues are
/// never scheduled.
pub fn schedule_slot(p: &Pipeline, queues: &[u64]) -> Result<Schedule, SchedulerError> {
    let n = p.n_links();
    if queues.len() != n {
        return Err(SchedulerError::LinkCount {
            got: queues.len(),
            expected: n,
        });
    }
    let vertex_queue = |v: VertexId| queues[p.gc.map.edge_of(v)];
    let mut vertices: Vec<VertexId> = match &p.mode {
        Mode::RootMwm(rr) => {
            let mut root = rr.root.clone();
            for e in 0..root.n_edges() {
                root.set_weight(
                    e,
                    Weight::from_integer(vertex_queue(rr.map.vertex_of(e)) as i64),
                );
            }
            max_weight_matching(&root)
                .edges
                .iter()
                .map(|&e| rr.map.vertex_of(e))
                .collect()
        }
        Mode::ExactMwis => {
            let weights = (0..n)
                .map(|v| Weight::from_integer(vertex_queue(v) as i64))
                .collect();
            let g =
                p.gc.graph
                    .clone()
                    .with_vertex_weights(weights)
                    .expect("one weight per vertex");
            brute_force_mwis(&g)
                .expect("size checked when the pipeline was built")
                .vertices
        }
        Mode::Greedy => {
            let weights: Vec<Weight> = (0..n)
                .map(|v| Weight::from_integer(vertex_queue(v) as i64))
                .collect();
            greedy_mwis(&p.gc.graph, &weights)
        }
    };
    vertices.retain(|&v| vertex_queue(v) > 0);
    let mut links: Vec<EdgeId> = vertices.into_iter().map(|v| p.gc.map.edge_of(v)).collect();
    links.sort_unstable();
    let weight = links.iter().map(|&l| queues[l]).sum();
    Ok(Schedule { links, weight })
}

/// Greedy independent set: repeatedly take the heaviest remaining vertex
/// (smallest id on ties) and delete its closed neighborhood.
pub fn greedy_mwis(gc: &SimpleGraph, weights: &[Weight]) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..gc.n_vertices()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    let mut removed = vec![false; gc.n_vertices()];
    let mut out = Vec::new();
    for v in order {
        if !removed[v] {
            out.push(v);
            removed[v] = true;
            for &w in gc.neighbors(v) {
                removed[w] = true;
            }
        }
    }
    out.sort_unstable();
    out
}

/// One slot of a simulation. Queues are measured at the end of the slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlotRecord {
    pub slot: u64,
    pub scheduled: Vec<EdgeId>,
    pub arrivals: Vec<EdgeId>,
    pub total_queue: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlotSummary {
    pub slots: u64,
    pub mode: &'static str,
    /// Mean over slots of the end-of-slot total queue.
    pub mean_total_queue: f64,
    /// Packets served per slot, per link.
    pub throughput: Vec<f64>,
    pub final_queues: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlotLog {
    pub records: Vec<SlotRecord>,
    pub summary: SlotSummary,
}

/// Slotted MaxWeight simulation. Each slot schedules on the current queues,
/// serves one packet per scheduled link, then adds one packet to each link
/// independently with probability equal to its rate, so a packet is never
/// served in the slot it arrives.
pub fn simulate(
    p: &Pipeline,
    rates: &[f64],
    slots: u64,
    seed: u64,
) -> Result<SlotLog, SchedulerError> {
    let n = p.n_links();
    if rates.len() != n {
        return Err(SchedulerError::LinkCount {
            got: rates.len(),
            expected: n,
        });
    }
    if let Some((link, &rate)) = rates
        .iter()
        .enumerate()
        .find(|(_, r)| !(0.0..=1.0).contains(*r))
    {
        return Err(SchedulerError::BadRate { link, rate });
    }
    if slots == 0 {
        return Err(SchedulerError::ZeroSlots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut queues = vec![0u64; n];
    let mut served = vec![0u64; n];
    let mut records = Vec::with_capacity(slots as usize);
    let mut queue_sum = 0u128;
    for slot in 0..slots {
        let arrivals: Vec<EdgeId> = (0..n).filter(|&l| rng.gen_bool(rates[l])).collect();
        let schedule = schedule_slot(p, &queues)?;
        for &l in &schedule.links {
            queues[l] -= 1;
            served[l] += 1;
        }
        for &l in &arrivals {
            queues[l] += 1;
        }
        let total_queue: u64 = queues.iter().sum();
        queue_sum += total_queue as u128;
        records.push(SlotRecord {
            slot,
            scheduled: schedule.links,
            arrivals,
            total_queue,
        });
    }
    let summary = SlotSummary {
        slots,
        mode: p.mode.name(),
        mean_total_queue: queue_sum as f64 / slots as f64,
        throughput: served.iter().map(|&s| s as f64 / slots as f64).collect(),
        final_queues: queues,
    };
    Ok(SlotLog { records, summary })
}
