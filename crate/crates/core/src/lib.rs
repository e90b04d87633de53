//! Line multigraph recognition, root reconstruction and MaxWeight link
//! scheduling on M-hop conflict graphs.
//!
//! The pieces, bottom up:
//!
//! * [`graph`]: multigraphs, simple graphs, the edge-list format.
//! * [`linegraph`]: line graphs, graph powers, conflict graphs and the
//!   simple line-graph recognizer.
//! * [`elehot`]: recognition of line multigraphs with root reconstruction.
//! * [`forbidden`]: forbidden induced subgraph catalogs, an exhaustive
//!   membership oracle and derivation of the catalogs from scratch.
//! * [`matching`]: exact maximum-weight matching and brute-force oracles.
//! * [`scheduler`]: per-slot scheduling and a queueing simulator.
//! * [`cli`]: the `linemg` command-line tool.

pub mod cli;
pub mod elehot;
pub mod forbidden;
pub mod graph;
pub mod linegraph;
pub mod matching;
pub mod scheduler;
