//! The `linemg` command-line tool.
//!
//! Exit codes: 0 for success or a positive answer, 1 for a negative answer
//! (the input is not a line graph), 2 for usage and input errors. Data goes
//! to stdout or `--out`; diagnostics go to stderr.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::elehot::{elehot, ElehotError};
use crate::forbidden::{
    derive_minimal_forbidden, load_catalog, scan, serialize_catalog, MAX_ENUMERATE,
};
use crate::graph::{
    format_weight, parse_graph, parse_weight, serialize_graph, Multigraph, SimpleGraph,
};
use crate::linegraph::{conflict_graph, line_graph, recognize_line_graph, Witness};
use crate::matching::{brute_force_mwis, max_weight_matching};
use crate::scheduler::{
    build_pipeline_with_limit, parse_link_values, read_queues, read_rates, schedule_slot, simulate,
    write_jsonl, write_slot_csv, Policy, DEFAULT_EXACT_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable capping the worker threads of parallel routines.
pub const THREADS_VAR: &str = "LINEMG_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "linemg",
    version,
    about = "Line multigraph recognition and MaxWeight link scheduling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is a line graph and summarize its root.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = RecognizeMode::Multi)]
        mode: RecognizeMode,
    },
    /// Write a multigraph root and its `gc_vertex,root_edge` map.
    Root {
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Map file; defaults to `<out>.map.csv`.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Write the line graph of a multigraph.
    Linegraph {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the M-hop conflict graph of a network and its `link_id,gc_vertex` map.
    Conflict {
        network: PathBuf,
        #[arg(long)]
        hops: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Map file; defaults to `<out>.map.csv` when `--out` is given.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// List the catalog graphs occurring as induced subgraphs.
    Forbidden {
        graph: PathBuf,
        #[arg(long, default_value = "multigraph7")]
        catalog: String,
    },
    /// Derive the minimal forbidden graphs on at most `max_n` vertices.
    Derive {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum-weight matching of an edge-weighted multigraph.
    Mwm { graph: PathBuf },
    /// Exact maximum-weight independent set (at most 25 vertices).
    Mwis {
        graph: PathBuf,
        /// Vertex weights as `link_id,value` CSV, keyed by vertex id.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Schedule one slot given per-link queue lengths.
    Schedule {
        network: PathBuf,
        #[arg(long)]
        hops: usize,
        #[arg(long)]
        queues: PathBuf,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Run the slotted queueing simulation.
    Simulate {
        network: PathBuf,
        #[arg(long)]
        hops: usize,
        #[arg(long)]
        rates: PathBuf,
        #[arg(long)]
        slots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-slot totals CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Full per-slot log as JSON lines.
        #[arg(long)]
        log: Option<PathBuf>,
        #[command(flatten)]
        policy: PolicyArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RecognizeMode {
    Simple,
    Multi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Auto,
    Exact,
    Greedy,
}

#[derive(clap::Args, Debug)]
struct PolicyArgs {
    #[arg(long, value_enum, default_value_t = PolicyArg::Auto)]
    policy: PolicyArg,
    /// Largest conflict graph solved exhaustively when the automatic policy
    /// cannot use root matching.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
}

impl PolicyArgs {
    fn policy(&self) -> Policy {
        match self.policy {
            PolicyArg::Auto => Policy::Auto,
            PolicyArg::Exact => Policy::Exact,
            PolicyArg::Greedy => Policy::Greedy,
        }
    }
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: i32,
    msg: String,
}

fn input_error(e: impl Display) -> Failure {
    Failure {
        code: EXIT_ERROR,
        msg: e.to_string(),
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            if !f.msg.is_empty() {
                let _ = writeln!(err, "linemg: {}", f.msg);
            }
            f.code
        }
    }
}

/// Applies `LINEMG_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Recognize { graph, mode } => cmd_recognize(&graph, mode, out),
        Command::Root {
            graph,
            out: path,
            map,
        } => cmd_root(&graph, &path, map, out, err),
        Command::Linegraph { graph, out: path } => {
            let g = read_multigraph(&graph)?;
            emit(
                &path,
                &serialize_graph(&to_multigraph(&line_graph(&g).graph)),
                out,
            )
        }
        Command::Conflict {
            network,
            hops,
            out: path,
            map,
        } => cmd_conflict(&network, hops, path, map, out),
        Command::Forbidden { graph, catalog } => {
            let g = read_simple(&graph)?;
            let catalog = load_catalog(&catalog).map_err(input_error)?;
            let hits = scan(&g, &catalog);
            wr(out, format_args!("hits: {}\n", hits.len()))?;
            for (name, emb) in hits {
                wr(out, format_args!("{name}: {}\n", join(&emb.mapping)))?;
            }
            Ok(())
        }
        Command::Derive { max_n, out: path } => {
            if max_n > MAX_ENUMERATE {
                return Err(input_error(format!("--max-n is at most {MAX_ENUMERATE}")));
            }
            let catalog = derive_minimal_forbidden(max_n).map_err(input_error)?;
            let text = serialize_catalog(&catalog);
            let count = format!("count: {}\n", catalog.len());
            match &path {
                Some(p) => {
                    write_file(p, &text)?;
                    wr(out, format_args!("{count}"))
                }
                None => {
                    wr(out, format_args!("{text}"))?;
                    wr(err, format_args!("{count}"))
                }
            }
        }
        Command::Mwm { graph } => {
            let g = read_multigraph(&graph)?;
            let m = max_weight_matching(&g);
            wr(
                out,
                format_args!(
                    "weight: {}\nedges: {}\n",
                    format_weight(&m.weight),
                    join(&m.edges)
                ),
            )
        }
        Command::Mwis { graph, weights } => {
            let mut g = read_simple(&graph)?;
            if let Some(path) = weights {
                let values =
                    parse_link_values(&read_text(&path)?, g.n_vertices()).map_err(input_error)?;
                let w = values
                    .iter()
                    .map(|v| parse_weight(v))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(input_error)?;
                g = g.with_vertex_weights(w).map_err(input_error)?;
            }
            let s = brute_force_mwis(&g).map_err(input_error)?;
            wr(
                out,
                format_args!(
                    "weight: {}\nvertices: {}\n",
                    format_weight(&s.weight),
                    join(&s.vertices)
                ),
            )
        }
        Command::Schedule {
            network,
            hops,
            queues,
            policy,
        } => {
            let net = read_multigraph(&network)?;
            let p = build_pipeline_with_limit(&net, hops, policy.policy(), policy.exact_limit)
                .map_err(input_error)?;
            let q = read_queues(&read_text(&queues)?, net.n_edges()).map_err(input_error)?;
            let s = schedule_slot(&p, &q).map_err(input_error)?;
            wr(
                out,
                format_args!(
                    "mode: {}\nlinks: {}\nweight: {}\n",
                    p.mode.name(),
                    join(&s.links),
                    s.weight
                ),
            )
        }
        Command::Simulate {
            network,
            hops,
            rates,
            slots,
            seed,
            out: path,
            log,
            policy,
        } => {
            let net = read_multigraph(&network)?;
            let p = build_pipeline_with_limit(&net, hops, policy.policy(), policy.exact_limit)
                .map_err(input_error)?;
            let r = read_rates(&read_text(&rates)?, net.n_edges()).map_err(input_error)?;
            let result = simulate(&p, &r, slots, seed).map_err(input_error)?;
            if let Some(path) = path {
                let file = fs::File::create(&path).map_err(|e| io_failure(&path, e))?;
                write_slot_csv(std::io::BufWriter::new(file), &result).map_err(input_error)?;
            }
            if let Some(path) = log {
                let file = fs::File::create(&path).map_err(|e| io_failure(&path, e))?;
                write_jsonl(std::io::BufWriter::new(file), &result).map_err(input_error)?;
            }
            let s = &result.summary;
            let throughput: Vec<String> = s.throughput.iter().map(|t| format!("{t:.4}")).collect();
            wr(
                out,
                format_args!(
                    "mode={} slots={} mean_total_queue={:.4} final_total_queue={} throughput={}\n",
                    s.mode,
                    s.slots,
                    s.mean_total_queue,
                    s.final_queues.iter().sum::<u64>(),
                    throughput.join(",")
                ),
            )
        }
    }
}

fn cmd_recognize(path: &Path, mode: RecognizeMode, out: &mut dyn Write) -> CmdResult {
    let g = read_simple(path)?;
    match mode {
        RecognizeMode::Multi => match elehot(&g) {
            Ok(rr) => {
                let hist = rr.root.multiplicity_histogram();
                let parallel: usize = hist.iter().enumerate().skip(2).map(|(k, c)| k * c).sum();
                let hist_text: Vec<String> = hist
                    .iter()
                    .enumerate()
                    .filter(|&(k, &c)| k > 0 && c > 0)
                    .map(|(k, c)| format!("{k}:{c}"))
                    .collect();
                wr(
                    out,
                    format_args!(
                        "YES\nroot: {} vertices, {} edges, {} parallel edges\nmultiplicity histogram: {}\n",
                        rr.root.n_vertices(),
                        rr.root.n_edges(),
                        parallel,
                        hist_text.join(" ")
                    ),
                )
            }
            Err(ElehotError::NotLineMultigraph(w)) => {
                wr(out, format_args!("NO\n{}\n", witness_line(&w)))?;
                Err(Failure {
                    code: EXIT_NO,
                    msg: String::new(),
                })
            }
            Err(e) => Err(input_error(e)),
        },
        RecognizeMode::Simple => match recognize_line_graph(&g) {
            Ok(root) => {
                let ambiguous = root.alternatives().count();
                wr(
                    out,
                    format_args!(
                        "YES\nroot: {} vertices, {} edges\nambiguous triangle components: {}\n",
                        root.root.n_vertices(),
                        root.root.n_edges(),
                        ambiguous
                    ),
                )
            }
            Err(e) => {
                wr(out, format_args!("NO\n{}\n", witness_line(&e.witness)))?;
                Err(Failure {
                    code: EXIT_NO,
                    msg: String::new(),
                })
            }
        },
    }
}

fn cmd_root(
    path: &Path,
    out_path: &Path,
    map: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let g = read_simple(path)?;
    match elehot(&g) {
        Ok(rr) => {
            write_file(out_path, &serialize_graph(&rr.root))?;
            let map_path = map.unwrap_or_else(|| default_map_path(out_path));
            let mut text = String::from("gc_vertex,root_edge\n");
            for (v, e) in rr.map.pairs() {
                text.push_str(&format!("{v},{e}\n"));
            }
            write_file(&map_path, &text)?;
            wr(
                out,
                format_args!(
                    "root: {} vertices, {} edges\n",
                    rr.root.n_vertices(),
                    rr.root.n_edges()
                ),
            )
        }
        Err(ElehotError::NotLineMultigraph(w)) => {
            wr(
                err,
                format_args!("not a line multigraph\n{}\n", witness_line(&w)),
            )?;
            Err(Failure {
                code: EXIT_NO,
                msg: String::new(),
            })
        }
        Err(e) => Err(input_error(e)),
    }
}

fn cmd_conflict(
    network: &Path,
    hops: usize,
    path: Option<PathBuf>,
    map: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    let net = read_multigraph(network)?;
    let gc = conflict_graph(&net, hops).map_err(input_error)?;
    emit(&path, &serialize_graph(&to_multigraph(&gc.graph)), out)?;
    let map_path = map.or_else(|| path.as_deref().map(default_map_path));
    if let Some(map_path) = map_path {
        let mut text = String::from("link_id,gc_vertex\n");
        for (v, link) in gc.map.pairs() {
            text.push_str(&format!("{link},{v}\n"));
        }
        write_file(&map_path, &text)?;
    }
    Ok(())
}

fn witness_line(w: &Witness) -> String {
    format!(
        "witness: {} at vertices {}",
        w.entry.as_deref().unwrap_or("unidentified"),
        join(&w.vertices)
    )
}

fn default_map_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".map.csv");
    PathBuf::from(s)
}

fn to_multigraph(g: &SimpleGraph) -> Multigraph {
    let edges: Vec<_> = g.edges().collect();
    Multigraph::from_edges(g.n_vertices(), &edges).expect("simple graph edges are valid")
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    input_error(format!("{}: {e}", path.display()))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn read_multigraph(path: &Path) -> Result<Multigraph, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_simple(path: &Path) -> Result<SimpleGraph, Failure> {
    let g = read_multigraph(path)?;
    if !g.is_simple() {
        return Err(input_error(format!(
            "{}: graph has parallel edges",
            path.display()
        )));
    }
    Ok(g.to_simple())
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn emit(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => write_file(p, text),
        None => wr(out, format_args!("{text}")),
    }
}

fn wr(out: &mut dyn Write, args: std::fmt::Arguments) -> CmdResult {
    out.write_fmt(args).map_err(input_error)
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
