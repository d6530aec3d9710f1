//! Separator constructions for the graph families with known bounds.
//!
//! Every construction ends by certifying its output with the verifier; a
//! result never claims `verified` without having passed [`crate::is_separator`].

mod complete;
mod forest;
mod general;
pub mod gnp;
mod hypercube;
mod stitch;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::detect;
use crate::graph::{EdgeId, FamilyError, Graph, Path, PathFamily};
use crate::signature::SignatureTable;
use crate::verify;

pub use complete::{permutation_round_unseparated, separator_complete, COMPLETE_RETRY_BUDGET};
pub use forest::{face_paths, separator_forest};
pub use general::separator_general;
pub use gnp::{separator_gnp, GnpConfig, GnpParams, GnpStats};
pub use hypercube::{hypercube_groups, separator_hypercube, HypercubeGroups};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Auto,
    General,
    Forest,
    Complete,
    Hypercube,
    Gnp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::General => "general",
            Method::Forest => "forest",
            Method::Complete => "complete",
            Method::Hypercube => "hypercube",
            Method::Gnp => "gnp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Method {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "auto" => Method::Auto,
            "general" => Method::General,
            "forest" => Method::Forest,
            "complete" => Method::Complete,
            "hypercube" => Method::Hypercube,
            "gnp" => Method::Gnp,
            other => return Err(ConstructError::UnknownMethod(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructError {
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph is not a complete graph on at least 5 vertices")]
    NotComplete,
    #[error("graph is not a hypercube of dimension at least 2 in binary labelling")]
    NotHypercube,
    #[error("G(n,p) construction needs an edge probability in (0, 1], got {0}")]
    BadProbability(f64),
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult {
    pub family: PathFamily,
    pub method: Method,
    /// The family-specific upper bound for this instance.
    pub claimed_bound: usize,
    /// Randomized restarts beyond the first attempt.
    pub retries: usize,
    /// Single-edge repair paths appended after assembly.
    pub patched: usize,
    /// The family passed the separator check.
    pub verified: bool,
}

impl ConstructionResult {
    pub fn size(&self) -> usize {
        self.family.len()
    }

    pub fn within_bound(&self) -> bool {
        self.size() <= self.claimed_bound
    }
}

/// Edges that still need a private path: uncovered edges and every `e` of an
/// ordered pair `(e, f)` with `signature(e) ⊆ signature(f)`.
pub(crate) fn repair_edges(table: &SignatureTable) -> BTreeSet<EdgeId> {
    let mut need: BTreeSet<EdgeId> =
        (0..table.edge_count()).map(EdgeId).filter(|&e| table.weight(e) == 0).collect();
    need.extend(verify::ordered_unseparated(table).into_iter().map(|(e, _)| e));
    need
}

/// Appends one single-edge path per edge that is not yet isolated from some
/// other edge. Returns the number of paths added.
pub(crate) fn patch(g: &Graph, fam: &mut PathFamily) -> Result<usize, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    let need = repair_edges(&table);
    let added = need.len();
    fam.extend(need.into_iter().map(|e| Path::from_edge(g, e)));
    Ok(added)
}

/// Picks forest, complete or hypercube by structure, otherwise general.
pub fn detect_method(g: &Graph) -> Method {
    if g.is_forest() {
        Method::Forest
    } else if detect::is_complete(g) && g.vertex_count() >= 5 {
        Method::Complete
    } else if detect::hypercube_dimension(g).is_some_and(|d| d >= 2) {
        Method::Hypercube
    } else {
        Method::General
    }
}

/// Runs a construction by name. `Gnp` infers `p` from the edge density.
pub fn construct(g: &Graph, method: Method, seed: u64) -> Result<ConstructionResult, ConstructError> {
    match method {
        Method::Auto => construct(g, detect_method(g), seed),
        Method::General => separator_general(g, seed),
        Method::Forest => separator_forest(g),
        Method::Complete => separator_complete(g, seed),
        Method::Hypercube => separator_hypercube(g),
        Method::Gnp => {
            let n = g.vertex_count();
            let pairs = n * n.saturating_sub(1) / 2;
            let p = if pairs == 0 { 0.0 } else { g.edge_count() as f64 / pairs as f64 };
            separator_gnp(g, p, seed, &GnpConfig::default()).map(|(r, _)| r)
        }
    }
}
