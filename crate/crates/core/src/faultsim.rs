//! Single-link fault localization with path tests.
//!
//! A test fails exactly when its path contains the failed link. Two decoders
//! read the failing set:
//!
//! * [`decode_signature`] keeps every edge lying on all failing tests. This
//!   pins the fault down for every failure exactly when the family is a
//!   separator.
//! * [`decode_intersection`] additionally discards edges lying on a passing
//!   test, which needs only pairwise distinct nonempty signatures.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::info_lower_bound;
use crate::generators::rng_from_seed;
use crate::graph::{EdgeId, FamilyError, Graph, PathFamily};
use crate::signature::SignatureTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "edges", rename_all = "lowercase")]
pub enum DecodeOutcome {
    NoFault,
    Identified(EdgeId),
    Ambiguous(Vec<EdgeId>),
    /// No single failed link explains the observation.
    Inconsistent,
}

/// Indices of the failing tests, ascending; empty without a fault.
pub fn observe(table: &SignatureTable, failed: Option<EdgeId>) -> Vec<usize> {
    failed.map_or_else(Vec::new, |e| table.indices(e).collect())
}

fn outcome(table: &SignatureTable, failing: &[usize], candidates: Vec<EdgeId>) -> DecodeOutcome {
    match candidates.as_slice() {
        [] => DecodeOutcome::Inconsistent,
        [e] if table.equals_set(*e, failing) => DecodeOutcome::Identified(*e),
        [_] => DecodeOutcome::Inconsistent,
        _ => DecodeOutcome::Ambiguous(candidates),
    }
}

/// Edges on every failing test, found by scanning the shortest one.
fn on_all_failing(table: &SignatureTable, failing: &[usize]) -> Option<Vec<EdgeId>> {
    if failing.iter().any(|&i| i >= table.family_size()) {
        return None;
    }
    let &shortest = failing.iter().min_by_key(|&&i| table.edges_of(i).len())?;
    let mut found: Vec<EdgeId> =
        table.edges_of(shortest).iter().copied().filter(|&e| table.contains_all(e, failing)).collect();
    found.sort_unstable();
    Some(found)
}

/// Candidates are the edges on every failing test.
pub fn decode_signature(table: &SignatureTable, failing: &[usize]) -> DecodeOutcome {
    match on_all_failing(table, failing) {
        None if failing.is_empty() => DecodeOutcome::NoFault,
        None => DecodeOutcome::Inconsistent,
        Some(c) => outcome(table, failing, c),
    }
}

/// Candidates are the edges on every failing test and on no passing one.
pub fn decode_intersection(table: &SignatureTable, failing: &[usize]) -> DecodeOutcome {
    match on_all_failing(table, failing) {
        None if failing.is_empty() => DecodeOutcome::NoFault,
        None => DecodeOutcome::Inconsistent,
        Some(c) => {
            let exact = c.into_iter().filter(|&e| table.equals_set(e, failing)).collect();
            outcome(table, failing, exact)
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct DecoderScore {
    /// Fault scenarios whose failed edge was reported.
    pub identified: usize,
    pub ambiguous: usize,
    /// Fault scenarios misread as no fault (uncovered edges).
    pub missed: usize,
    pub inconsistent: usize,
    pub identification_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub edge_count: usize,
    pub family_size: usize,
    /// `⌈log₂ m⌉`, the fewest tests any scheme with arbitrary edge sets needs.
    pub info_lb: usize,
    /// Fault scenarios run (the no-fault case is always checked on top).
    pub fault_scenarios: usize,
    pub exhaustive: bool,
    pub no_fault_detected: bool,
    pub signature: DecoderScore,
    pub intersection: DecoderScore,
    pub tests_per_edge_min: usize,
    pub tests_per_edge_mean: f64,
    pub tests_per_edge_max: usize,
}

fn score(table: &SignatureTable, faults: &[EdgeId], decode: fn(&SignatureTable, &[usize]) -> DecodeOutcome) -> DecoderScore {
    let mut s = faults
        .par_iter()
        .map(|&e| {
            let mut s = DecoderScore::default();
            match decode(table, &observe(table, Some(e))) {
                DecodeOutcome::Identified(f) if f == e => s.identified += 1,
                DecodeOutcome::Identified(_) | DecodeOutcome::Inconsistent => s.inconsistent += 1,
                DecodeOutcome::Ambiguous(_) => s.ambiguous += 1,
                DecodeOutcome::NoFault => s.missed += 1,
            }
            s
        })
        .reduce(DecoderScore::default, |a, b| DecoderScore {
            identified: a.identified + b.identified,
            ambiguous: a.ambiguous + b.ambiguous,
            missed: a.missed + b.missed,
            inconsistent: a.inconsistent + b.inconsistent,
            identification_rate: 0.0,
        });
    s.identification_rate = if faults.is_empty() { 1.0 } else { s.identified as f64 / faults.len() as f64 };
    s
}

/// Injects faults and scores both decoders. With `trials == 0` or
/// `trials >= m` every edge fails once; otherwise `trials` edges are drawn
/// uniformly with replacement using `seed`.
pub fn campaign(g: &Graph, fam: &PathFamily, trials: usize, seed: u64) -> Result<CampaignReport, FamilyError> {
    let table = SignatureTable::build(g, fam)?;
    let m = g.edge_count();
    let exhaustive = trials == 0 || trials >= m;
    let faults: Vec<EdgeId> = if exhaustive {
        g.edge_ids().collect()
    } else {
        let mut rng = rng_from_seed(seed);
        (0..trials).map(|_| EdgeId(rng.gen_range(0..m))).collect()
    };
    let weights: Vec<usize> = g.edge_ids().map(|e| table.weight(e)).collect();
    Ok(CampaignReport {
        edge_count: m,
        family_size: fam.len(),
        info_lb: info_lower_bound(m),
        fault_scenarios: faults.len(),
        exhaustive,
        no_fault_detected: decode_signature(&table, &observe(&table, None)) == DecodeOutcome::NoFault
            && decode_intersection(&table, &observe(&table, None)) == DecodeOutcome::NoFault,
        signature: score(&table, &faults, decode_signature),
        intersection: score(&table, &faults, decode_intersection),
        tests_per_edge_min: weights.iter().copied().min().unwrap_or(0),
        tests_per_edge_mean: if m == 0 { 0.0 } else { weights.iter().sum::<usize>() as f64 / m as f64 },
        tests_per_edge_max: weights.iter().copied().max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn single_path_on_p3_is_ambiguous() {
        let g = generators::path(3);
        let fam = PathFamily::from_sequences(&g, [vec![0, 1, 2]]).unwrap();
        let t = SignatureTable::build(&g, &fam).unwrap();
        let both = DecodeOutcome::Ambiguous(vec![EdgeId(0), EdgeId(1)]);
        assert_eq!(decode_signature(&t, &[0]), both);
        assert_eq!(decode_intersection(&t, &[0]), both);
        assert_eq!(decode_signature(&t, &[]), DecodeOutcome::NoFault);
    }

    #[test]
    fn unexplained_failures_are_inconsistent() {
        let g = generators::path(4);
        let fam = PathFamily::from_sequences(&g, [vec![0, 1], vec![2, 3]]).unwrap();
        let t = SignatureTable::build(&g, &fam).unwrap();
        assert_eq!(decode_signature(&t, &[0, 1]), DecodeOutcome::Inconsistent);
        assert_eq!(decode_intersection(&t, &[0, 1]), DecodeOutcome::Inconsistent);
    }

    #[test]
    fn test_set_gap_on_p3() {
        // Signatures {0} and {0, 1}: distinct but nested.
        let g = generators::path(3);
        let fam = PathFamily::from_sequences(&g, [vec![0, 1, 2], vec![1, 2]]).unwrap();
        assert!(crate::check_test_set(&g, &fam).unwrap());
        assert!(!crate::is_separator(&g, &fam).unwrap());
        let r = campaign(&g, &fam, 0, 0).unwrap();
        assert_eq!(r.intersection.identification_rate, 1.0);
        assert_eq!(r.signature.ambiguous, 1);
        assert!(r.no_fault_detected);
    }

    #[test]
    fn separators_identify_everything() {
        let g = generators::petersen();
        let fam = crate::construct::separator_general(&g, 2).unwrap().family;
        let r = campaign(&g, &fam, 0, 0).unwrap();
        assert!(r.exhaustive && r.no_fault_detected);
        assert_eq!(r.signature.identified, 15);
        assert_eq!(r.intersection.identified, 15);
        assert!(r.family_size >= r.info_lb);
    }

    #[test]
    fn empty_family_finds_nothing() {
        let g = generators::cycle(4);
        let r = campaign(&g, &PathFamily::new(), 0, 0).unwrap();
        assert_eq!(r.signature.identification_rate, 0.0);
        assert_eq!(r.signature.missed, 4);
    }

    #[test]
    fn sampled_campaign_is_seeded() {
        let g = generators::complete(7);
        let fam = PathFamily::singletons(&g);
        let a = campaign(&g, &fam, 5, 11).unwrap();
        assert!(!a.exhaustive && a.fault_scenarios == 5);
        assert_eq!(a, campaign(&g, &fam, 5, 11).unwrap());
    }
}
