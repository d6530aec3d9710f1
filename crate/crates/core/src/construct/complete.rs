use rand::seq::SliceRandom;
use rand::Rng;

use super::{repair_edges, ConstructError, ConstructionResult, Method};
use crate::cover::walecki_sequences;
use crate::detect::is_complete;
use crate::generators::rng_from_seed;
use crate::graph::{Graph, Path, PathFamily, Vertex};
use crate::signature::SignatureTable;
use crate::verify;

/// Permutation rounds tried before giving up on the `≤ 2` repair target.
pub const COMPLETE_RETRY_BUDGET: usize = 64;

/// Repair paths an attempt may need and still count as a success.
const ACCEPTED_REPAIRS: usize = 2;

fn permuted_round<R: Rng>(g: &Graph, base: &[Vec<Vertex>], rng: &mut R) -> Result<PathFamily, ConstructError> {
    let n = g.vertex_count();
    let mut seqs: Vec<Vec<Vertex>> = base.to_vec();
    for _ in 0..3 {
        let mut perm: Vec<Vertex> = (0..n).collect();
        perm.shuffle(rng);
        seqs.extend(base.iter().map(|s| s.iter().map(|&v| perm[v]).collect()));
    }
    Ok(PathFamily::from_sequences(g, seqs)?)
}

fn check_input(g: &Graph) -> Result<Vec<Vec<Vertex>>, ConstructError> {
    if g.vertex_count() < 5 || !is_complete(g) {
        return Err(ConstructError::NotComplete);
    }
    walecki_sequences(g.vertex_count()).map_err(|_| ConstructError::NotComplete)
}

/// Separator of `K_n` (`n ≥ 5`): the Walecki cover together with three
/// uniformly random relabellings of it, plus at most two single-edge repairs.
///
/// A round needing more than two repairs is redrawn, up to
/// [`COMPLETE_RETRY_BUDGET`] rounds. If none succeeds, the round with the
/// fewest repairs is returned fully repaired: it still separates, but may
/// exceed `claimed_bound`.
pub fn separator_complete(g: &Graph, seed: u64) -> Result<ConstructionResult, ConstructError> {
    let base = check_input(g)?;
    let claimed_bound = 4 * g.vertex_count().div_ceil(2) + 2;
    let mut rng = rng_from_seed(seed);
    let mut best: Option<(PathFamily, usize)> = None;
    for attempt in 0..COMPLETE_RETRY_BUDGET {
        let mut family = permuted_round(g, &base, &mut rng)?;
        let need = repair_edges(&SignatureTable::build(g, &family)?);
        let repairs = need.len();
        family.extend(need.into_iter().map(|e| Path::from_edge(g, e)));
        if repairs <= ACCEPTED_REPAIRS {
            let verified = crate::is_separator(g, &family)?;
            return Ok(ConstructionResult {
                family,
                method: Method::Complete,
                claimed_bound,
                retries: attempt,
                patched: repairs,
                verified,
            });
        }
        if best.as_ref().is_none_or(|(_, r)| repairs < *r) {
            best = Some((family, repairs));
        }
    }
    let (family, patched) = best.expect("budget is positive");
    let verified = crate::is_separator(g, &family)?;
    Ok(ConstructionResult {
        family,
        method: Method::Complete,
        claimed_bound,
        retries: COMPLETE_RETRY_BUDGET,
        patched,
        verified,
    })
}

/// Unordered edge pairs left unseparated by the first permutation round that
/// [`separator_complete`] draws for `seed`.
pub fn permutation_round_unseparated(g: &Graph, seed: u64) -> Result<usize, ConstructError> {
    let base = check_input(g)?;
    let family = permuted_round(g, &base, &mut rng_from_seed(seed))?;
    let table = SignatureTable::build(g, &family)?;
    Ok(verify::report_from_table(&table).unseparated_pairs.len())
}
