//! Forbidden induced subgraph catalogs and the machinery that checks them.
//!
//! Two catalogs ship with the crate: `beineke9`, the nine minimal graphs
//! that are not line graphs of simple graphs, and `multigraph7`, the seven
//! minimal graphs that are not line graphs of loop-free multigraphs. Both
//! can be re-derived from scratch with [`derive_minimal_forbidden`] and the
//! clique-cover membership test in [`krausz_oracle`].

mod enumerate;
mod krausz;

pub use enumerate::{
    canonical_form, derive_minimal_forbidden, enumerate_connected, CanonicalForm, MAX_ENUMERATE,
};
pub use krausz::{clique_cover, krausz_oracle, CliqueCover, KRAUSZ_MAX_VERTICES};

use thiserror::Error;

use crate::graph::{
    connected_components, find_induced, is_isomorphic, parse_graph, Embedding, GraphError,
    SimpleGraph,
};

const BEINEKE9: &str = include_str!("../../data/beineke9.txt");
const MULTIGRAPH7: &str = include_str!("../../data/multigraph7.txt");

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown catalog `{0}` (expected beineke9 or multigraph7)")]
    UnknownName(String),
    #[error("catalog entry `{entry}`: {source}")]
    Graph { entry: String, source: GraphError },
    #[error("malformed catalog: {0}")]
    Malformed(String),
    #[error("catalog `{name}` has {got} entries, expected {expected}")]
    Count {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("input has {got} vertices, limit is {max}")]
    TooLarge { max: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Reference,
    Derived,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Reference => "reference",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: Option<String>,
    pub graph: SimpleGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub name: String,
    pub provenance: Provenance,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Loads one of the bundled catalogs by name.
pub fn load_catalog(name: &str) -> Result<Catalog, CatalogError> {
    let (text, expected) = match name {
        "beineke9" => (BEINEKE9, 9),
        "multigraph7" => (MULTIGRAPH7, 7),
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    let catalog = parse_catalog(name, text)?;
    if catalog.len() != expected {
        return Err(CatalogError::Count {
            name: name.into(),
            expected,
            got: catalog.len(),
        });
    }
    Ok(catalog)
}

/// Parses the catalog format: edge-list blocks, each introduced by a
/// `# name: <id>` comment and optionally described by `# desc: <text>`.
/// A `# provenance: reference|derived` comment before the first entry
/// sets the provenance.
pub fn parse_catalog(name: &str, text: &str) -> Result<Catalog, CatalogError> {
    let mut provenance = Provenance::Reference;
    let mut blocks: Vec<(String, Option<String>, String)> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix("# name:") {
            blocks.push((rest.trim().to_string(), None, String::new()));
        } else if let Some(rest) = trimmed.strip_prefix("# desc:") {
            let block = blocks
                .last_mut()
                .ok_or_else(|| CatalogError::Malformed("description before first entry".into()))?;
            block.1 = Some(rest.trim().to_string());
        } else if let Some(rest) = trimmed.strip_prefix("# provenance:") {
            provenance = match rest.trim() {
                "reference" => Provenance::Reference,
                "derived" => Provenance::Derived,
                other => return Err(CatalogError::Malformed(format!("provenance `{other}`"))),
            };
        } else if let Some(block) = blocks.last_mut() {
            block.2.push_str(line);
            block.2.push('\n');
        } else if !trimmed.is_empty() && !trimmed.starts_with('#') {
            return Err(CatalogError::Malformed(
                "graph data before first `# name:`".into(),
            ));
        }
    }

    let mut entries: Vec<CatalogEntry> = Vec::with_capacity(blocks.len());
    for (entry, description, body) in blocks {
        let mg = parse_graph(&body).map_err(|source| CatalogError::Graph {
            entry: entry.clone(),
            source,
        })?;
        if !mg.is_simple() {
            return Err(CatalogError::Malformed(format!(
                "entry `{entry}` has parallel edges"
            )));
        }
        let graph = mg.to_simple();
        if connected_components(&graph).len() != 1 {
            return Err(CatalogError::Malformed(format!(
                "entry `{entry}` is not connected"
            )));
        }
        if let Some(dup) = entries
            .iter()
            .find(|e| is_isomorphic(&e.graph, &graph).is_some())
        {
            return Err(CatalogError::Malformed(format!(
                "entries `{}` and `{entry}` are isomorphic",
                dup.name
            )));
        }
        entries.push(CatalogEntry {
            name: entry,
            description,
            graph,
        });
    }
    Ok(Catalog {
        name: name.to_string(),
        provenance,
        entries,
    })
}

pub fn serialize_catalog(catalog: &Catalog) -> String {
    let mut out = format!("# provenance: {}\n", catalog.provenance.tag());
    for entry in &catalog.entries {
        out.push_str(&format!("\n# name: {}\n", entry.name));
        if let Some(d) = &entry.description {
            out.push_str(&format!("# desc: {d}\n"));
        }
        out.push_str(&format!("v {}\n", entry.graph.n_vertices()));
        for (u, v) in entry.graph.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
    }
    out
}

/// Every catalog entry that occurs in `g` as an induced subgraph, with the
/// lexicographically first embedding of each.
pub fn scan(g: &SimpleGraph, catalog: &Catalog) -> Vec<(String, Embedding)> {
    catalog
        .entries
        .iter()
        .filter_map(|e| find_induced(g, &e.graph).map(|emb| (e.name.clone(), emb)))
        .collect()
}
