//! Structural recognisers used to pick a construction.

use crate::graph::Graph;

pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// `Some(d)` when `g` is `Q_d` with vertex `x` at the binary coordinates of `x`.
pub fn hypercube_dimension(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 || !n.is_power_of_two() {
        return None;
    }
    let d = n.trailing_zeros() as usize;
    is_hypercube_of_dim(g, d).then_some(d)
}

pub fn is_hypercube_of_dim(g: &Graph, d: usize) -> bool {
    g.vertex_count() == 1 << d
        && g.edge_count() == d << d.saturating_sub(1)
        && (0..g.vertex_count()).all(|v| g.degree(v) == d)
        && g.edges().iter().all(|&(u, v)| (u ^ v).count_ones() == 1)
}

/// Vertex sets of the two sides when `g` is a complete bipartite graph
/// `K_{a,b}` with `a ≤ b`, `a ≥ 1`, and no isolated vertices.
pub fn complete_bipartite_sides(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() == 0 || g.components().len() != 1 {
        return None;
    }
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &(w, _) in g.neighbors(u) {
            if side[w] == usize::MAX {
                side[w] = 1 - side[u];
                stack.push(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    let a = side.iter().filter(|&&s| s == 0).count();
    let b = n - a;
    (g.edge_count() == a * b).then_some((a.min(b), a.max(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn recognises_families() {
        assert!(is_complete(&generators::complete(6)));
        assert!(!is_complete(&generators::cycle(6)));
        assert_eq!(hypercube_dimension(&generators::hypercube(4)), Some(4));
        assert_eq!(hypercube_dimension(&generators::cycle(4)), None);
        assert_eq!(hypercube_dimension(&generators::complete(4)), None);
        assert_eq!(complete_bipartite_sides(&generators::complete_bipartite(2, 3)), Some((2, 3)));
        assert_eq!(complete_bipartite_sides(&generators::star(4)), Some((1, 4)));
        assert_eq!(complete_bipartite_sides(&generators::path(5)), None);
    }
}
