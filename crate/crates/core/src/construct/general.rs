use rand::seq::SliceRandom;

use super::{patch, ConstructError, ConstructionResult, Method};
use crate::bounds::ceil_log2;
use crate::cover::{cut_paths, path_cover};
use crate::generators::rng_from_seed;
use crate::graph::{EdgeId, Graph, Path, PathFamily};

/// Separator for an arbitrary graph from a path cover and binary edge labels.
///
/// The cover is cut into pieces of at most `⌈m/n⌉` edges. Inside each piece
/// the edges get distinct labels of `t = ⌈log₂⌈m/n⌉⌉` bits (order shuffled by
/// `seed`). For every bit position the edges with that bit set, and separately
/// the edges with it clear, are path-covered; the union with the pieces
/// separates every pair. Labels may be comparable as bit vectors, which is why
/// both polarities are covered.
pub fn separator_general(g: &Graph, seed: u64) -> Result<ConstructionResult, ConstructError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m == 0 {
        return Ok(ConstructionResult {
            family: PathFamily::new(),
            method: Method::General,
            claimed_bound: 0,
            retries: 0,
            patched: 0,
            verified: true,
        });
    }
    let piece_len = m.div_ceil(n);
    let bits = ceil_log2(piece_len);
    let pieces = cut_paths(&path_cover(g), piece_len);

    let mut rng = rng_from_seed(seed);
    let mut label = vec![0usize; m];
    for piece in &pieces {
        let mut codes: Vec<usize> = (0..piece.len()).collect();
        codes.shuffle(&mut rng);
        for (&EdgeId(e), code) in piece.edges().iter().zip(codes) {
            label[e] = code;
        }
    }

    let mut family = pieces;
    for bit in 0..bits {
        for polarity in [1, 0] {
            let keep: Vec<EdgeId> = g.edge_ids().filter(|e| (label[e.0] >> bit) & 1 == polarity).collect();
            if keep.is_empty() {
                continue;
            }
            let (sub, _) = g.edge_subgraph(&keep);
            family.extend(
                path_cover(&sub)
                    .into_paths()
                    .into_iter()
                    .map(|p| Path::new(g, p.vertices().to_vec()).expect("subgraph paths live in g")),
            );
        }
    }

    let patched = patch(g, &mut family)?;
    let verified = crate::is_separator(g, &family)?;
    Ok(ConstructionResult {
        family,
        method: Method::General,
        claimed_bound: 2 * n * bits + n,
        retries: 0,
        patched,
        verified,
    })
}
