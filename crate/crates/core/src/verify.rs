//! Exact decision procedures for the separator and test-set properties.
//!
//! A family separates `G` iff every edge is covered and the signatures form an
//! antichain: `signature(e) ⊆ signature(f)` says precisely that no path contains
//! `e` while avoiding `f`. Subset candidates for `e` are restricted to the edges
//! of the shortest path through `e`, which keeps the pair scan far below `m²`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{EdgeId, FamilyError, Graph, PathFamily};
use crate::signature::SignatureTable;

/// Which containment(s) leave an unordered pair `e < f` unseparated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    /// No path contains `e` without `f`.
    Forward,
    /// No path contains `f` without `e`.
    Backward,
    /// Identical signatures.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnseparatedPair {
    pub e: EdgeId,
    pub f: EdgeId,
    pub containment: Containment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub edge_count: usize,
    pub family_size: usize,
    pub is_separator: bool,
    pub is_test_set: bool,
    /// Unordered pairs between covered edges, lexicographic in `(e, f)`.
    pub unseparated_pairs: Vec<UnseparatedPair>,
    pub uncovered_edges: Vec<EdgeId>,
}

impl SeparationReport {
    /// Ordered pairs `(e, f)` still lacking a path with `e` but not `f`,
    /// counted over covered edges only.
    pub fn missing_directions(&self) -> usize {
        self.unseparated_pairs
            .iter()
            .map(|p| if p.containment == Containment::Both { 2 } else { 1 })
            .sum()
    }
}

/// Ordered pairs `(e, f)`, `e ≠ f`, with `signature(e) ⊆ signature(f)`,
/// sorted lexicographically. Uncovered edges pair with every other edge.
pub fn unseparated_pairs(g: &Graph, fam: &PathFamily) -> Result<Vec<(EdgeId, EdgeId)>, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    Ok(ordered_unseparated(&table))
}

pub(crate) fn ordered_unseparated(table: &SignatureTable) -> Vec<(EdgeId, EdgeId)> {
    let m = table.edge_count();
    (0..m)
        .into_par_iter()
        .flat_map_iter(|ei| {
            let e = EdgeId(ei);
            let mut out: Vec<(EdgeId, EdgeId)> = match rarest_index(table, e) {
                None => (0..m).filter(|&f| f != ei).map(|f| (e, EdgeId(f))).collect(),
                Some(i) => table
                    .edges_of(i)
                    .iter()
                    .filter(|&&f| f != e && table.is_subset(e, f))
                    .map(|&f| (e, f))
                    .collect(),
            };
            out.sort_unstable();
            out
        })
        .collect()
}

fn rarest_index(table: &SignatureTable, e: EdgeId) -> Option<usize> {
    table.indices(e).min_by_key(|&i| table.edges_of(i).len())
}

/// Whether some covered edge's signature is contained in another's.
fn has_comparable_pair(table: &SignatureTable) -> bool {
    (0..table.edge_count()).into_par_iter().any(|ei| {
        let e = EdgeId(ei);
        match rarest_index(table, e) {
            None => false,
            Some(i) => table.edges_of(i).iter().any(|&f| f != e && table.is_subset(e, f)),
        }
    })
}

fn uncovered(table: &SignatureTable) -> Vec<EdgeId> {
    (0..table.edge_count()).map(EdgeId).filter(|&e| table.weight(e) == 0).collect()
}

/// Full separation report.
pub fn check_separator(g: &Graph, fam: &PathFamily) -> Result<SeparationReport, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    Ok(report_from_table(&table))
}

pub(crate) fn report_from_table(table: &SignatureTable) -> SeparationReport {
    let uncovered_edges = uncovered(table);
    let ordered = ordered_unseparated(table);
    let covered: HashSet<(EdgeId, EdgeId)> = ordered
        .iter()
        .copied()
        .filter(|&(e, f)| table.weight(e) > 0 && table.weight(f) > 0)
        .collect();
    let mut unseparated_pairs: Vec<UnseparatedPair> = covered
        .iter()
        .filter_map(|&(e, f)| {
            if e < f {
                let containment = if covered.contains(&(f, e)) { Containment::Both } else { Containment::Forward };
                Some(UnseparatedPair { e, f, containment })
            } else if !covered.contains(&(f, e)) {
                Some(UnseparatedPair { e: f, f: e, containment: Containment::Backward })
            } else {
                None
            }
        })
        .collect();
    unseparated_pairs.sort_unstable_by_key(|p| (p.e, p.f));
    let is_separator = uncovered_edges.is_empty() && unseparated_pairs.is_empty();
    SeparationReport {
        edge_count: table.edge_count(),
        family_size: table.family_size(),
        is_separator,
        is_test_set: test_set_from_table(table),
        unseparated_pairs,
        uncovered_edges,
    }
}

/// Fast yes/no separator check.
pub fn is_separator(g: &Graph, fam: &PathFamily) -> Result<bool, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    Ok(uncovered(&table).is_empty() && !has_comparable_pair(&table))
}

/// Whether the failing-test set determines the faulty edge and a fault is
/// never mistaken for "no fault": signatures are nonempty and pairwise
/// distinct. Every separator is a test set; the converse fails as soon as two
/// signatures are comparable but different.
pub fn check_test_set(g: &Graph, fam: &PathFamily) -> Result<bool, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    Ok(test_set_from_table(&table))
}

fn test_set_from_table(table: &SignatureTable) -> bool {
    let mut seen = HashSet::with_capacity(table.edge_count());
    (0..table.edge_count()).map(EdgeId).all(|e| table.weight(e) > 0 && seen.insert(table.row(e)))
}
