//! CSV and JSON-lines files for per-link values and slot logs.

use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SlotLog;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("link {0} out of range for {1} links")]
    UnknownLink(usize, usize),
    #[error("link {0} listed twice")]
    DuplicateLink(usize),
    #[error("link {0} has no value")]
    MissingLink(usize),
    #[error("link {link}: bad value `{value}`")]
    BadValue { link: usize, value: String },
}

#[derive(Debug, Deserialize, Serialize)]
struct LinkValue {
    link_id: usize,
    value: String,
}

/// Reads a `link_id,value` CSV (header required) with exactly one row per
/// link `0..n_links`, returning the values indexed by link.
pub fn parse_link_values(text: &str, n_links: usize) -> Result<Vec<String>, IoError> {
    let mut out: Vec<Option<String>> = vec![None; n_links];
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    for row in reader.deserialize() {
        let LinkValue { link_id, value } = row?;
        let slot = out
            .get_mut(link_id)
            .ok_or(IoError::UnknownLink(link_id, n_links))?;
        if slot.replace(value).is_some() {
            return Err(IoError::DuplicateLink(link_id));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(l, v)| v.ok_or(IoError::MissingLink(l)))
        .collect()
}

pub fn read_queues(text: &str, n_links: usize) -> Result<Vec<u64>, IoError> {
    parse_link_values(text, n_links)?
        .into_iter()
        .enumerate()
        .map(|(link, v)| v.parse().map_err(|_| IoError::BadValue { link, value: v }))
        .collect()
}

pub fn read_rates(text: &str, n_links: usize) -> Result<Vec<f64>, IoError> {
    parse_link_values(text, n_links)?
        .into_iter()
        .enumerate()
        .map(|(link, v)| match v.parse::<f64>() {
            Ok(r) if (0.0..=1.0).contains(&r) => Ok(r),
            _ => Err(IoError::BadValue { link, value: v }),
        })
        .collect()
}

pub fn write_link_values<W: Write, T: ToString>(out: W, values: &[T]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    for (link_id, v) in values.iter().enumerate() {
        w.serialize(LinkValue {
            link_id,
            value: v.to_string(),
        })?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct SlotRow {
    slot: u64,
    total_queue: u64,
    scheduled: usize,
    arrivals: usize,
}

/// Per-slot totals: `slot,total_queue,scheduled,arrivals`.
pub fn write_slot_csv<W: Write>(out: W, log: &SlotLog) -> Result<(), IoError> {
    let mut w = csv::Writer::from_writer(out);
    for r in &log.records {
        w.serialize(SlotRow {
            slot: r.slot,
            total_queue: r.total_queue,
            scheduled: r.scheduled.len(),
            arrivals: r.arrivals.len(),
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Full log, one JSON object per slot.
pub fn write_jsonl<W: Write>(mut out: W, log: &SlotLog) -> Result<(), IoError> {
    for r in &log.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
