//! Exact path separation number of tiny graphs by exhaustive search.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, Path, PathFamily, Vertex};

/// Environment variable overriding the default edge limit.
pub const MAX_EDGES_VAR: &str = "PATHSEP_MAX_EXACT_EDGES";
pub const DEFAULT_MAX_VERTICES: usize = 10;
pub const DEFAULT_MAX_EDGES: usize = 14;
/// Signatures are stored as 64-bit masks.
const HARD_MAX_EDGES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("instance too large for exact search: {what} = {got} exceeds {limit}")]
    TooLarge { what: &'static str, got: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for Limits {
    /// Defaults, with the edge limit taken from [`MAX_EDGES_VAR`] when set.
    fn default() -> Self {
        let max_edges = std::env::var(MAX_EDGES_VAR)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_EDGES)
            .min(HARD_MAX_EDGES);
        Limits { max_vertices: DEFAULT_MAX_VERTICES, max_edges }
    }
}

impl Limits {
    fn check(&self, g: &Graph) -> Result<(), ExactError> {
        if g.vertex_count() > self.max_vertices {
            return Err(ExactError::TooLarge { what: "n", got: g.vertex_count(), limit: self.max_vertices });
        }
        if g.edge_count() > self.max_edges {
            return Err(ExactError::TooLarge { what: "m", got: g.edge_count(), limit: self.max_edges });
        }
        Ok(())
    }
}

/// Every simple path with at least one edge, once each, oriented so the
/// first vertex is smaller than the last. Ordered by length, then vertices.
pub fn enumerate_paths(g: &Graph) -> Result<Vec<Path>, ExactError> {
    enumerate_paths_with(g, &Limits::default())
}

pub fn enumerate_paths_with(g: &Graph, limits: &Limits) -> Result<Vec<Path>, ExactError> {
    limits.check(g)?;
    let mut seqs: Vec<Vec<Vertex>> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        let mut stack = vec![s];
        on_path[s] = true;
        extend_from(g, &mut stack, &mut on_path, &mut seqs);
        on_path[s] = false;
    }
    seqs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(seqs.into_iter().map(|s| Path::new(g, s).expect("walked along edges")).collect())
}

fn extend_from(g: &Graph, stack: &mut Vec<Vertex>, on_path: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
    let x = *stack.last().expect("nonempty");
    for &(y, _) in g.neighbors(x) {
        if on_path[y] {
            continue;
        }
        stack.push(y);
        on_path[y] = true;
        if stack[0] < y {
            out.push(stack.clone());
        }
        extend_from(g, stack, on_path, out);
        on_path[y] = false;
        stack.pop();
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub value: usize,
    pub family: PathFamily,
}

/// Minimum separator size together with a witness family.
pub fn exact_psn(g: &Graph) -> Result<ExactSolution, ExactError> {
    exact_psn_with(g, &Limits::default())
}

pub fn exact_psn_with(g: &Graph, limits: &Limits) -> Result<ExactSolution, ExactError> {
    let paths = enumerate_paths_with(g, limits)?;
    let m = g.edge_count();
    if m <= 1 {
        let family = PathFamily::singletons(g);
        return Ok(ExactSolution { value: m, family });
    }
    let masks: Vec<u64> =
        paths.iter().map(|p| p.edges().iter().fold(0u64, |acc, e| acc | 1 << e.0)).collect();
    let search = Search { m, masks: &masks };
    let start = (1..).find(|&t| middle_binomial(t) >= m as u64).expect("binomials grow");
    for t in start..=m {
        if let Some(chosen) = search.root(t) {
            let family = chosen.into_iter().map(|i| paths[i].clone()).collect();
            return Ok(ExactSolution { value: t, family });
        }
    }
    unreachable!("the single-edge paths always separate")
}

/// `C(k, ⌊k/2⌋)`, saturating.
fn middle_binomial(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k / 2 {
        c = c.saturating_mul((k - i) as u64) / (i as u64 + 1);
    }
    c
}

struct Search<'a> {
    m: usize,
    masks: &'a [u64],
}

/// A still unmet demand: some path must contain `need` and avoid `avoid`.
#[derive(Clone, Copy)]
struct Demand {
    need: usize,
    avoid: Option<usize>,
}

impl Search<'_> {
    fn signatures(&self, chosen: &[usize]) -> Vec<u64> {
        let mut sig = vec![0u64; self.m];
        for (k, &i) in chosen.iter().enumerate() {
            let mut bits = self.masks[i];
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                sig[e] |= 1 << k;
                bits &= bits - 1;
            }
        }
        sig
    }

    /// The most constrained unmet demand and its admissible paths, `None`
    /// when the chosen paths already separate. An empty candidate list means
    /// the branch is dead; so does failing the antichain counting bound.
    fn next_demand(&self, chosen: &[usize], banned: &[bool], remaining: usize) -> Option<Vec<usize>> {
        let sig = self.signatures(chosen);
        // Edges with equal signatures need pairwise incomparable, nonempty
        // signatures on the remaining paths.
        let mut sorted = sig.clone();
        sorted.sort_unstable();
        let mut run = 0;
        for i in 0..sorted.len() {
            run = if i > 0 && sorted[i] == sorted[i - 1] { run + 1 } else { 1 };
            let cap = if remaining == 0 { u64::from(sorted[i] != 0) } else { middle_binomial(remaining) };
            if (run as u64) > cap {
                return Some(Vec::new());
            }
        }
        let mut best: Option<(Demand, usize)> = None;
        let mut consider = |d: Demand| {
            let count = self.candidates(d, chosen, banned).count();
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((d, count));
            }
            count == 0
        };
        for e in 0..self.m {
            if sig[e] == 0 && consider(Demand { need: e, avoid: None }) {
                return Some(Vec::new());
            }
        }
        for e in 0..self.m {
            for f in 0..self.m {
                if e != f && sig[e] != 0 && sig[e] & !sig[f] == 0 && consider(Demand { need: e, avoid: Some(f) }) {
                    return Some(Vec::new());
                }
            }
        }
        best.map(|(d, _)| self.candidates(d, chosen, banned).collect())
    }

    fn candidates<'b>(&'b self, d: Demand, chosen: &'b [usize], banned: &'b [bool]) -> impl Iterator<Item = usize> + 'b {
        let avoid = d.avoid.map_or(0, |f| 1u64 << f);
        (0..self.masks.len()).filter(move |&i| {
            !banned[i] && self.masks[i] >> d.need & 1 == 1 && self.masks[i] & avoid == 0 && !chosen.contains(&i)
        })
    }

    /// Top level: branches are searched in parallel, the first success in
    /// branch order is returned so the witness is deterministic.
    fn root(&self, t: usize) -> Option<Vec<usize>> {
        let banned = vec![false; self.masks.len()];
        let cands = self.next_demand(&[], &banned, t)?;
        cands.par_iter().enumerate().find_map_first(|(k, &p)| {
            let mut banned = banned.clone();
            for &q in &cands[..k] {
                banned[q] = true;
            }
            let mut chosen = vec![p];
            self.dfs(&mut chosen, &mut banned, t - 1).then_some(chosen)
        })
    }

    fn dfs(&self, chosen: &mut Vec<usize>, banned: &mut [bool], remaining: usize) -> bool {
        let Some(cands) = self.next_demand(chosen, banned, remaining) else { return true };
        if remaining == 0 || cands.is_empty() {
            return false;
        }
        let mut found = false;
        let mut newly_banned = Vec::new();
        for &p in &cands {
            chosen.push(p);
            if self.dfs(chosen, banned, remaining - 1) {
                found = true;
                break;
            }
            chosen.pop();
            banned[p] = true;
            newly_banned.push(p);
        }
        for p in newly_banned {
            banned[p] = false;
        }
        found
    }
}
