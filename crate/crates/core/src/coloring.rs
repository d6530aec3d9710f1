//! Proper edge colorings.

use crate::graph::{EdgeId, Graph, Vertex};

const NONE: usize = usize::MAX;

struct State {
    /// `at[v * k + c]` is the neighbour joined to `v` by an edge of colour `c`.
    at: Vec<usize>,
    k: usize,
    color: Vec<usize>,
}

impl State {
    fn neighbor(&self, v: Vertex, c: usize) -> Option<Vertex> {
        let w = self.at[v * self.k + c];
        (w != NONE).then_some(w)
    }

    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[v * self.k + c] == NONE
    }

    fn first_free(&self, v: Vertex) -> usize {
        (0..self.k).find(|&c| self.is_free(v, c)).expect("Δ+1 colours leave one free")
    }

    fn set(&mut self, g: &Graph, u: Vertex, v: Vertex, c: usize) {
        let e = g.edge_between(u, v).expect("coloured pairs are edges");
        self.color[e.0] = c;
        self.at[u * self.k + c] = v;
        self.at[v * self.k + c] = u;
    }

    fn clear(&mut self, g: &Graph, u: Vertex, v: Vertex) -> usize {
        let e = g.edge_between(u, v).expect("coloured pairs are edges");
        let c = std::mem::replace(&mut self.color[e.0], NONE);
        self.at[u * self.k + c] = NONE;
        self.at[v * self.k + c] = NONE;
        c
    }

    fn color_of(&self, g: &Graph, u: Vertex, v: Vertex) -> usize {
        self.color[g.edge_between(u, v).expect("fan pairs are edges").0]
    }
}

/// Proper edge colouring with at most `Δ + 1` colours (Misra and Gries).
/// Returns one colour per edge, indexed by [`EdgeId`].
pub fn misra_gries(g: &Graph) -> Vec<usize> {
    let k = g.max_degree() + 1;
    let mut st = State { at: vec![NONE; g.vertex_count() * k], k, color: vec![NONE; g.edge_count()] };
    for &(u, v) in g.edges() {
        // Maximal fan at u starting with the uncoloured edge uv.
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("fan starts nonempty");
            let next = (0..k).find_map(|c| {
                if !st.is_free(last, c) {
                    return None;
                }
                st.neighbor(u, c).filter(|x| !fan.contains(x))
            });
            match next {
                Some(x) => fan.push(x),
                None => break,
            }
        }
        let c = st.first_free(u);
        let d = st.first_free(*fan.last().expect("nonempty"));

        // Swap c and d along the alternating path leaving u by a d-edge.
        let mut walk = vec![u];
        let mut want = d;
        while let Some(x) = st.neighbor(*walk.last().expect("nonempty"), want) {
            walk.push(x);
            want = if want == d { c } else { d };
        }
        let recolor: Vec<(Vertex, Vertex, usize)> =
            walk.windows(2).map(|w| (w[0], w[1], st.clear(g, w[0], w[1]))).collect();
        for (a, b, old) in recolor {
            st.set(g, a, b, if old == d { c } else { d });
        }

        // Longest fan prefix still valid after the swap, ending where d is free.
        let mut w = 0;
        for i in 0..fan.len() {
            if i > 0 && !st.is_free(fan[i - 1], st.color_of(g, u, fan[i])) {
                break;
            }
            if st.is_free(fan[i], d) {
                w = i;
                break;
            }
        }
        let shifted: Vec<usize> = (1..=w).map(|i| st.clear(g, u, fan[i])).collect();
        for (i, col) in shifted.into_iter().enumerate() {
            st.set(g, u, fan[i], col);
        }
        st.set(g, u, fan[w], d);
    }
    st.color
}

/// First-fit edge colouring; at most `2Δ - 1` colours.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut used: Vec<Vec<bool>> = vec![Vec::new(); g.vertex_count()];
    let mut color = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let c = (0..).find(|&c| !used[u].get(c).copied().unwrap_or(false) && !used[v].get(c).copied().unwrap_or(false));
        let c = c.expect("unbounded search");
        for x in [u, v] {
            if used[x].len() <= c {
                used[x].resize(c + 1, false);
            }
            used[x][c] = true;
        }
        color.push(c);
    }
    color
}

/// No two edges sharing an endpoint have the same colour.
pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    if colors.len() != g.edge_count() {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        let mut seen: Vec<usize> = g.neighbors(v).iter().map(|&(_, e)| colors[e.0]).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    })
}

/// Edges grouped by colour, in colour order; every class is a matching when
/// the colouring is proper.
pub fn color_classes(colors: &[usize]) -> Vec<Vec<EdgeId>> {
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![Vec::new(); k];
    for (e, &c) in colors.iter().enumerate() {
        classes[c].push(EdgeId(e));
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn check(g: &Graph) {
        let c = misra_gries(g);
        assert!(is_proper(g, &c));
        assert!(c.iter().all(|&x| x <= g.max_degree()));
        let gr = greedy_coloring(g);
        assert!(is_proper(g, &gr));
        assert!(gr.iter().all(|&x| x < (2 * g.max_degree()).saturating_sub(1).max(1)));
    }

    #[test]
    fn named_graphs() {
        check(&generators::petersen());
        check(&generators::complete(9));
        check(&generators::complete(10));
        check(&generators::hypercube(5));
        check(&generators::star(7));
        check(&generators::complete_bipartite(4, 6));
    }

    #[test]
    fn random_graphs() {
        for seed in 0..30 {
            check(&generators::gnp(60, 0.2, seed));
        }
    }

    #[test]
    fn classes_partition_edges() {
        let g = generators::gnp(30, 0.3, 7);
        let classes = color_classes(&misra_gries(&g));
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.edge_count());
    }
}
