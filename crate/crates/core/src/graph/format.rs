//! Line-oriented edge-list text format.
//!
//! ```text
//! # comment
//! v 4
//! e 0 1
//! e 1 2 2.5
//! ```
//!
//! `v <n>` must be the first non-comment line. Each `e` line adds one edge,
//! so repeated lines give parallel edges. Weights are optional and default
//! to 1; they may be written as integers, terminating decimals or `p/q`.

use num_traits::{One, Zero};

use super::{GraphError, Multigraph, Weight};

pub fn parse_graph(text: &str) -> Result<Multigraph, GraphError> {
    let mut graph: Option<Multigraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        match (tag, graph.as_mut()) {
            ("v", None) => {
                let n = tokens
                    .next()
                    .ok_or_else(|| err("missing vertex count".into()))?
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad vertex count: {e}")))?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after vertex count".into()));
                }
                graph = Some(Multigraph::new(n));
            }
            ("v", Some(_)) => return Err(err("duplicate `v` line".into())),
            (_, None) => return Err(err("expected `v <n>` before any edges".into())),
            ("e", Some(g)) => {
                let mut endpoint = |name: &str| -> Result<usize, GraphError> {
                    tokens
                        .next()
                        .ok_or_else(|| err(format!("missing endpoint {name}")))?
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad endpoint {name}: {e}")))
                };
                let u = endpoint("u")?;
                let v = endpoint("v")?;
                let weight = match tokens.next() {
                    Some(tok) => parse_weight(tok).map_err(err)?,
                    None => Weight::one(),
                };
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                g.add_weighted_edge(u, v, weight)
                    .map_err(|e| err(e.to_string()))?;
            }
            (other, Some(_)) => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    graph.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `v <n>` line".into(),
    })
}

/// Writes `g` so that [`parse_graph`] reproduces it exactly. Unit weights
/// are omitted.
pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = format!("v {}\n", g.n_vertices());
    for e in g.edges() {
        if e.weight.is_one() {
            out.push_str(&format!("e {} {}\n", e.u, e.v));
        } else {
            out.push_str(&format!("e {} {} {}\n", e.u, e.v, format_weight(&e.weight)));
        }
    }
    out
}

/// Parses a non-negative rational: `3`, `2.75`, or `5/8`.
pub fn parse_weight(tok: &str) -> Result<Weight, String> {
    let bad = || format!("bad weight `{tok}`");
    let w = if let Some((p, q)) = tok.split_once('/') {
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Weight::new(p, q)
    } else if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let mag = int
            .abs()
            .checked_mul(scale)
            .and_then(|x| x.checked_add(frac))
            .ok_or_else(bad)?;
        Weight::new(if negative || int < 0 { -mag } else { mag }, scale)
    } else {
        Weight::from_integer(tok.parse().map_err(|_| bad())?)
    };
    if w < Weight::zero() {
        return Err(format!("negative weight `{tok}`"));
    }
    Ok(w)
}

/// Integer, terminating decimal, or `p/q` when no finite decimal exists.
pub fn format_weight(w: &Weight) -> String {
    if w.is_integer() {
        return w.numer().to_string();
    }
    let mut d = *w.denom();
    let mut digits = 0u32;
    while d % 10 == 0 {
        d /= 10;
        digits += 1;
    }
    while d % 2 == 0 || d % 5 == 0 {
        d /= if d % 2 == 0 { 2 } else { 5 };
        digits += 1;
    }
    if d != 1 || digits > 15 {
        return format!("{}/{}", w.numer(), w.denom());
    }
    let scale = 10i64.pow(digits);
    let Some(scaled) = w.numer().checked_mul(scale / w.denom()) else {
        return format!("{}/{}", w.numer(), w.denom());
    };
    let (int, frac) = (scaled / scale, scaled % scale);
    format!("{int}.{:0width$}", frac, width = digits as usize)
}
