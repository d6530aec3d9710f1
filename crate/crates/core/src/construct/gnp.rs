//! Separators for dense random graphs by stitching matchings into paths.
//!
//! The edges are split uniformly into four classes. For each of the three
//! ways to pair the classes up, either side serves once as the primary graph
//! while the other side supplies connector edges, giving six roles. In each
//! role the primary edges are split `s` times into `r` random subgraphs; each
//! subgraph is edge-coloured, each colour class is optionally split further
//! into a separating system of sub-matchings, and every sub-matching is
//! stitched into a path through connector edges. Whatever remains
//! unseparated is repaired with single-edge paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::stitch::{Connectors, Stitcher};
use super::{patch, ConstructError, ConstructionResult, Method};
use crate::bounds::ceil_log2;
use crate::coloring::{color_classes, greedy_coloring, misra_gries};
use crate::generators::rng_from_seed;
use crate::graph::{EdgeId, Graph, PathFamily, Vertex};

const PAIRINGS: [[[usize; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnpConfig {
    /// Split every colour class into `⌈log₂(Δ+1)⌉` sub-matchings carrying
    /// pairwise incomparable codes before stitching. Off: one path system
    /// per colour class.
    pub separating_matchings: bool,
    /// First-fit colouring (up to `2Δ-1` colours) instead of `Δ+1`.
    pub greedy_coloring: bool,
    /// Pósa rotations tried each time a path cannot be extended.
    pub rotation_budget: usize,
}

impl Default for GnpConfig {
    fn default() -> Self {
        GnpConfig { separating_matchings: true, greedy_coloring: false, rotation_budget: 40 }
    }
}

/// Split parameters derived from `n` and `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GnpParams {
    /// Random subgraphs per split, `⌊3pn / ln n⌋`, at least 1.
    pub r: usize,
    /// Number of independent splits, `⌊4 ln n / ln(pn / ln n)⌋`, at least 1.
    pub s: usize,
    /// `4 ln n / ln(pn / ln n)` before flooring, with the denominator held at
    /// least 1 when `pn / ln n < e`.
    pub s_real: f64,
}

impl GnpParams {
    pub fn new(n: usize, p: f64) -> Self {
        let ln_n = (n.max(2) as f64).ln();
        let r = ((3.0 * p * n as f64 / ln_n).floor() as usize).max(1);
        let s_real = 4.0 * ln_n / (p * n as f64 / ln_n).ln().max(1.0);
        GnpParams { r, s: (s_real.floor() as usize).max(1), s_real }
    }

    /// The normaliser `p·n·s` for comparing family sizes across instances.
    pub fn scale(&self, n: usize, p: f64) -> f64 {
        p * n as f64 * self.s_real
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnpStats {
    pub params: GnpParams,
    pub subgraphs: usize,
    pub matchings: usize,
    pub sub_matchings: usize,
    /// Paths produced by stitching, before repair.
    pub stitched_paths: usize,
    /// Paths beyond one per sub-matching caused by stuck stitching.
    pub stitch_splits: usize,
    pub patched: usize,
    /// Final family size divided by `p·n·s`.
    pub ratio: f64,
}

/// Weight-`⌊t/2⌋` codes of length `t` (weight at least 1), handed out
/// cyclically; bit `j` of an edge's code puts it in sub-matching `j`.
fn split_matching(matching: &[EdgeId], t: usize) -> Vec<Vec<EdgeId>> {
    if t <= 1 {
        return vec![matching.to_vec()];
    }
    let weight = (t / 2).max(1);
    let codes: Vec<usize> = (0..1usize << t).filter(|c| c.count_ones() as usize == weight).collect();
    let mut parts = vec![Vec::new(); t];
    for (i, &e) in matching.iter().enumerate() {
        let code = codes[i % codes.len()];
        for (j, part) in parts.iter_mut().enumerate() {
            if code >> j & 1 == 1 {
                part.push(e);
            }
        }
    }
    parts.retain(|p| !p.is_empty());
    parts
}

#[derive(Default)]
struct RoleOutput {
    paths: Vec<Vec<Vertex>>,
    subgraphs: usize,
    matchings: usize,
    sub_matchings: usize,
}

fn run_split(
    g: &Graph,
    primary: &[EdgeId],
    conn: &Connectors,
    params: &GnpParams,
    cfg: &GnpConfig,
    seed: u64,
) -> RoleOutput {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = vec![Vec::new(); params.r];
    for &e in primary {
        classes[rng.gen_range(0..params.r)].push(e);
    }
    let mut out = RoleOutput::default();
    let mut stitcher = Stitcher::new(conn, cfg.rotation_budget);
    for class in classes.iter().filter(|c| !c.is_empty()) {
        out.subgraphs += 1;
        let (h, back) = g.edge_subgraph(class);
        let colors = if cfg.greedy_coloring { greedy_coloring(&h) } else { misra_gries(&h) };
        let t = if cfg.separating_matchings { ceil_log2(h.max_degree() + 1) } else { 1 };
        for matching in color_classes(&colors) {
            out.matchings += 1;
            let in_g: Vec<EdgeId> = matching.iter().map(|e| back[e.0]).collect();
            for part in split_matching(&in_g, t) {
                out.sub_matchings += 1;
                let pairs: Vec<(Vertex, Vertex)> = part.iter().map(|&e| g.endpoints(e)).collect();
                out.paths.extend(stitcher.stitch(&pairs, &mut rng));
            }
        }
    }
    out
}

/// Separator of a graph drawn from `G(n, p)`; `p` sets the split parameters.
///
/// The result is always a separator: residual unseparated pairs are repaired
/// with single-edge paths, counted in `patched`. `claimed_bound` is
/// `⌈2pns⌉`, the path count the stitching would reach if every colour class
/// of every subgraph had at most `ln n / 3` colours and every stitch produced
/// a single path.
pub fn separator_gnp(
    g: &Graph,
    p: f64,
    seed: u64,
    cfg: &GnpConfig,
) -> Result<(ConstructionResult, GnpStats), ConstructError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(ConstructError::BadProbability(p));
    }
    let n = g.vertex_count();
    let params = GnpParams::new(n, p);
    let mut rng = rng_from_seed(seed);
    let class: Vec<usize> = g.edge_ids().map(|_| rng.gen_range(0..4)).collect();

    // (primary classes, connector classes, per-split seeds) for the six roles.
    let mut jobs = Vec::new();
    for pairing in PAIRINGS {
        for (a, b) in [(pairing[0], pairing[1]), (pairing[1], pairing[0])] {
            let seeds: Vec<u64> = (0..params.s).map(|_| rng.gen()).collect();
            jobs.push((a, b, seeds));
        }
    }
    let outputs: Vec<RoleOutput> = jobs
        .par_iter()
        .flat_map_iter(|(a, b, seeds)| {
            let primary: Vec<EdgeId> = g.edge_ids().filter(|e| a.contains(&class[e.0])).collect();
            let conn = Connectors::new(
                n,
                g.edge_ids().filter(|e| b.contains(&class[e.0])).map(|e| g.endpoints(e)),
            );
            seeds
                .iter()
                .map(|&s| run_split(g, &primary, &conn, &params, cfg, s))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut stats = GnpStats {
        params,
        subgraphs: 0,
        matchings: 0,
        sub_matchings: 0,
        stitched_paths: 0,
        stitch_splits: 0,
        patched: 0,
        ratio: 0.0,
    };
    let mut seqs = Vec::new();
    for o in outputs {
        stats.subgraphs += o.subgraphs;
        stats.matchings += o.matchings;
        stats.sub_matchings += o.sub_matchings;
        seqs.extend(o.paths);
    }
    stats.stitched_paths = seqs.len();
    stats.stitch_splits = seqs.len() - stats.sub_matchings;

    let mut family = PathFamily::from_sequences(g, seqs)?;
    let patched = patch(g, &mut family)?;
    let verified = crate::is_separator(g, &family)?;
    stats.patched = patched;
    let scale = params.scale(n, p);
    stats.ratio = family.len() as f64 / scale;
    let result = ConstructionResult {
        family,
        method: Method::Gnp,
        claimed_bound: (2.0 * scale).ceil() as usize,
        retries: 0,
        patched,
        verified,
    };
    Ok((result, stats))
}
