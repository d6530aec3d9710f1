//! Closed-form lower and upper bounds on the path separation number.
//!
//! Real-valued bounds are generic over the float type; compare them against
//! integer family sizes with [`slack`] to absorb rounding.

use num_traits::Float;
use serde::Serialize;
use thiserror::Error;

use crate::detect;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("entropy argument must lie in [0, 1]")]
    EntropyDomain,
    #[error("bound needs n >= 2 and m >= n (got n = {n}, m = {m})")]
    EntropyBoundDomain { n: usize, m: usize },
    #[error("graph is not a forest")]
    NotForest,
    #[error("need 1 <= a <= (n - 1) / 2 (got a = {a}, n = {n})")]
    BipartiteDomain { a: usize, n: usize },
    #[error("argument {got} below minimum {min}")]
    TooSmall { min: usize, got: usize },
}

/// Comparison slack for real-valued bounds.
pub fn slack<T: Float>() -> T {
    T::from(1e-9).expect("representable")
}

fn cast<T: Float>(x: usize) -> T {
    T::from(x).expect("integer fits the float type")
}

/// `⌈log₂ x⌉` for `x ≥ 1`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// `H₂(x) = -x log₂ x - (1-x) log₂(1-x)`, with `H₂(0) = H₂(1) = 0`.
pub fn binary_entropy<T: Float>(x: T) -> Result<T, BoundsError> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(BoundsError::EntropyDomain);
    }
    if x == T::zero() || x == T::one() {
        return Ok(T::zero());
    }
    let y = T::one() - x;
    Ok(-(x * x.log2()) - y * y.log2())
}

/// Entropy lower bound on path separators of any graph with `n` vertices and
/// `m ≥ n` edges, together with the two weaker logarithmic forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyBound<T> {
    /// `log₂ m / H₂((n-1)/m)`.
    pub entropy: T,
    /// `m ln m / (n ln(en/2))`.
    pub log_form: T,
    /// `m ln m / ((n-1) ln(en/2))`, the last step of the derivation.
    pub log_form_chain: T,
}

pub fn entropy_lower_bound<T: Float>(n: usize, m: usize) -> Result<EntropyBound<T>, BoundsError> {
    if n < 2 || m < n {
        return Err(BoundsError::EntropyBoundDomain { n, m });
    }
    let (nf, mf) = (cast::<T>(n), cast::<T>(m));
    let x = (nf - T::one()) / mf;
    let entropy = mf.log2() / binary_entropy(x)?;
    let two = cast::<T>(2);
    let denom_log = (T::one().exp() * nf / two).ln();
    let numer = mf * mf.ln();
    Ok(EntropyBound {
        entropy,
        log_form: numer / (nf * denom_log),
        log_form_chain: numer / ((nf - T::one()) * denom_log),
    })
}

/// `⌈log₂ m⌉`, the size of an unrestricted test family.
pub fn info_lower_bound(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        ceil_log2(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneralUpperBound<T> {
    /// `2n ⌈log₂ ⌈m/n⌉⌉ + n`.
    pub value: usize,
    /// `3 n log₂ n`.
    pub cap: T,
}

pub fn upper_general<T: Float>(n: usize, m: usize) -> Result<GeneralUpperBound<T>, BoundsError> {
    if n < 1 {
        return Err(BoundsError::TooSmall { min: 1, got: n });
    }
    let per_vertex = m.div_ceil(n).max(1);
    let nf = cast::<T>(n);
    Ok(GeneralUpperBound { value: 2 * n * ceil_log2(per_vertex) + n, cap: cast::<T>(3) * nf * nf.log2() })
}

/// Degree-1 count, degree-2 count and number of path components (with at
/// least one edge) of a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForestProfile {
    pub leaves: usize,
    pub degree_two: usize,
    pub path_components: usize,
}

pub fn forest_profile(g: &Graph) -> Result<ForestProfile, BoundsError> {
    if !g.is_forest() {
        return Err(BoundsError::NotForest);
    }
    let deg = g.degrees();
    let path_components = g
        .components()
        .iter()
        .filter(|c| c.len() >= 2 && c.iter().all(|&v| deg[v] <= 2))
        .count();
    Ok(ForestProfile {
        leaves: deg.iter().filter(|&&d| d == 1).count(),
        degree_two: deg.iter().filter(|&&d| d == 2).count(),
        path_components,
    })
}

/// Exact path separation number of a forest: `v1 + v2 - p`.
pub fn forest_psn(g: &Graph) -> Result<usize, BoundsError> {
    let p = forest_profile(g)?;
    Ok(p.leaves + p.degree_two - p.path_components)
}

/// Smallest path separation number over trees on `n` vertices:
/// `⌈n/2⌉ + 1` for `n ≥ 4`; for `n ≤ 3` every tree is a path and the value is `n - 1`.
pub fn mintree_bound(n: usize) -> Result<usize, BoundsError> {
    match n {
        0 | 1 => Err(BoundsError::TooSmall { min: 2, got: n }),
        2 | 3 => Ok(n - 1),
        _ => Ok(n.div_ceil(2) + 1),
    }
}

/// Whether a tree attains [`mintree_bound`]: for even `n` all degrees are 1
/// or 3; for odd `n` exactly one vertex has degree 2 or 4 and the rest 1 or 3.
pub fn is_extremal_tree(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !g.is_forest() || g.components().len() != 1 {
        return (2..=3).contains(&n) && g.edge_count() == n - 1 && g.components().len() == 1;
    }
    let deg = g.degrees();
    let odd_one_out = deg.iter().filter(|&&d| d != 1 && d != 3).count();
    if n % 2 == 0 {
        odd_one_out == 0
    } else {
        odd_one_out == 1 && deg.iter().any(|&d| d == 2 || d == 4)
    }
}

/// Entropy-method lower bound for `K_{a,n-a}`:
/// `(a(n-a)/(2a+1)) · ln(a(n-a)) / ln(en/2)`.
pub fn bipartite_lower_bound<T: Float>(a: usize, n: usize) -> Result<T, BoundsError> {
    if a < 1 || 2 * a + 1 > n {
        return Err(BoundsError::BipartiteDomain { a, n });
    }
    let edges = cast::<T>(a * (n - a));
    let two = cast::<T>(2);
    Ok(edges / cast::<T>(2 * a + 1) * edges.ln() / (T::one().exp() * cast::<T>(n) / two).ln())
}

/// Lower and upper bounds for `Q_d`, `d ≥ 2`.
///
/// The lower bound is exact (4) at `d = 2`, the entropy bound
/// `log₂ 12 / H₂(7/12)` at `d = 3`, and `d² / (2 log₂ d)` beyond.
pub fn hypercube_bounds<T: Float>(d: usize) -> Result<(T, usize), BoundsError> {
    if d < 2 {
        return Err(BoundsError::TooSmall { min: 2, got: d });
    }
    let upper = 2 * d * (d + 1) - 8;
    let lower = match d {
        2 => cast::<T>(4),
        3 => entropy_lower_bound::<T>(8, 12)?.entropy,
        _ => {
            let df = cast::<T>(d);
            df * df / (cast::<T>(2) * df.log2())
        }
    };
    Ok((lower, upper))
}

/// Every bound that applies to a graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport<T> {
    pub n: usize,
    pub m: usize,
    pub entropy_lb: Option<T>,
    pub log_form_lb: Option<T>,
    pub log_form_chain_lb: Option<T>,
    pub info_lb: usize,
    pub upper_general: Option<usize>,
    pub upper_cap: Option<T>,
    pub tree_exact: Option<usize>,
    pub mintree_lb: Option<usize>,
    pub hypercube_lb: Option<T>,
    pub hypercube_ub: Option<usize>,
    pub bipartite_lb: Option<T>,
}

impl<T: Float> BoundsReport<T> {
    pub fn for_graph(g: &Graph) -> Self {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let entropy = entropy_lower_bound::<T>(n, m).ok();
        let upper = if m >= 1 { upper_general::<T>(n, m).ok() } else { None };
        let is_tree = g.is_forest() && g.components().len() == 1;
        let hypercube = detect::hypercube_dimension(g).filter(|&d| d >= 2).and_then(|d| hypercube_bounds::<T>(d).ok());
        let bipartite = detect::complete_bipartite_sides(g)
            .and_then(|(a, _)| bipartite_lower_bound::<T>(a, n).ok());
        BoundsReport {
            n,
            m,
            entropy_lb: entropy.map(|b| b.entropy),
            log_form_lb: entropy.map(|b| b.log_form),
            log_form_chain_lb: entropy.map(|b| b.log_form_chain),
            info_lb: info_lower_bound(m),
            upper_general: upper.map(|u| u.value),
            upper_cap: upper.map(|u| u.cap),
            tree_exact: forest_psn(g).ok(),
            mintree_lb: if is_tree { mintree_bound(n).ok() } else { None },
            hypercube_lb: hypercube.map(|h| h.0),
            hypercube_ub: hypercube.map(|h| h.1),
            bipartite_lb: bipartite,
        }
    }
}
