//! Joining the edges of a matching into few paths through connector edges.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Vertex;

const NO_UNIT: usize = usize::MAX;
const OFF_PATH: usize = usize::MAX;

/// An undirected graph used only for its edges as glue between matching edges.
#[derive(Debug, Clone)]
pub(crate) struct Connectors {
    n: usize,
    adj: Vec<Vec<Vertex>>,
}

impl Connectors {
    pub(crate) fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut c = Connectors { n, adj: vec![Vec::new(); n] };
        for (u, v) in edges {
            c.adj[u].push(v);
            c.adj[v].push(u);
        }
        c
    }

    #[cfg(test)]
    pub(crate) fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }
}

/// Reusable scratch space for [`stitch`], sized to the vertex count.
pub(crate) struct Stitcher<'a> {
    conn: &'a Connectors,
    /// Matching edge containing each vertex, for the matching being stitched.
    unit: Vec<usize>,
    pos: Vec<usize>,
    rotation_budget: usize,
}

impl<'a> Stitcher<'a> {
    pub(crate) fn new(conn: &'a Connectors, rotation_budget: usize) -> Self {
        Stitcher { conn, unit: vec![NO_UNIT; conn.n], pos: vec![OFF_PATH; conn.n], rotation_budget }
    }

    /// Vertex sequences of paths that together contain every edge of
    /// `matching`, consecutive matching edges being joined by one connector
    /// edge or by two connector edges through a vertex outside the matching.
    /// Ideally one path results; more appear when the search gets stuck.
    pub(crate) fn stitch<R: Rng>(&mut self, matching: &[(Vertex, Vertex)], rng: &mut R) -> Vec<Vec<Vertex>> {
        for (i, &(a, b)) in matching.iter().enumerate() {
            self.unit[a] = i;
            self.unit[b] = i;
        }
        let mut placed = vec![false; matching.len()];
        let mut order: Vec<usize> = (0..matching.len()).collect();
        order.shuffle(rng);
        let mut out = Vec::new();
        for start in order {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            let (a, b) = matching[start];
            let mut path = if rng.gen() { vec![a, b] } else { vec![b, a] };
            self.pos[path[0]] = 0;
            self.pos[path[1]] = 1;
            self.grow(&mut path, matching, &mut placed, rng);
            for &v in &path {
                self.pos[v] = OFF_PATH;
            }
            out.push(self.trim(path));
        }
        for &(a, b) in matching {
            self.unit[a] = NO_UNIT;
            self.unit[b] = NO_UNIT;
        }
        out
    }

    fn grow<R: Rng>(&mut self, path: &mut Vec<Vertex>, matching: &[(Vertex, Vertex)], placed: &mut [bool], rng: &mut R) {
        let mut rotations = 0;
        let mut flipped_since_progress = false;
        loop {
            if placed.iter().all(|&p| p) {
                return;
            }
            if self.extend(path, matching, placed) {
                flipped_since_progress = false;
                rotations = 0;
                continue;
            }
            if !flipped_since_progress {
                path.reverse();
                self.reindex(path, 0);
                flipped_since_progress = true;
                continue;
            }
            if rotations >= self.rotation_budget || !self.rotate(path, rng) {
                return;
            }
            rotations += 1;
        }
    }

    /// Appends one unplaced matching edge at the end of `path`, directly or
    /// through one stepping-stone vertex.
    fn extend(&mut self, path: &mut Vec<Vertex>, matching: &[(Vertex, Vertex)], placed: &mut [bool]) -> bool {
        let x = *path.last().expect("paths are nonempty");
        let open = |y: Vertex, placed: &[bool]| {
            let u = self.unit[y];
            u != NO_UNIT && !placed[u]
        };
        let conn = self.conn;
        let found = conn.adj[x].iter().find(|&&y| open(y, placed)).map(|&y| (None, y)).or_else(|| {
            conn.adj[x].iter().filter(|&&z| self.unit[z] == NO_UNIT && self.pos[z] == OFF_PATH).find_map(|&z| {
                conn.adj[z].iter().find(|&&y| open(y, placed)).map(|&y| (Some(z), y))
            })
        });
        let Some((via, y)) = found else { return false };
        let u = self.unit[y];
        placed[u] = true;
        let (a, b) = matching[u];
        let other = if a == y { b } else { a };
        for v in via.into_iter().chain([y, other]) {
            self.pos[v] = path.len();
            path.push(v);
        }
        true
    }

    /// Pósa rotation at the end of the path: for a connector edge from the end
    /// `x` to an interior `p_i` whose successor edge is not a matching edge,
    /// reverse the segment after `p_i`, making `p_{i+1}` the new end.
    fn rotate<R: Rng>(&mut self, path: &mut [Vertex], rng: &mut R) -> bool {
        let k = path.len() - 1;
        let x = path[k];
        let pivots: Vec<usize> = self.conn.adj[x]
            .iter()
            .map(|&y| self.pos[y])
            .filter(|&i| i != OFF_PATH && i + 1 < k)
            .filter(|&i| {
                let (a, b) = (path[i], path[i + 1]);
                self.unit[a] == NO_UNIT || self.unit[a] != self.unit[b]
            })
            .collect();
        let Some(&i) = pivots.choose(rng) else { return false };
        path[i + 1..].reverse();
        self.reindex(path, i + 1);
        true
    }

    fn reindex(&mut self, path: &[Vertex], from: usize) {
        for (i, &v) in path.iter().enumerate().skip(from) {
            self.pos[v] = i;
        }
    }

    /// Drops stepping-stone vertices left dangling at either end.
    fn trim(&self, mut path: Vec<Vertex>) -> Vec<Vertex> {
        while path.last().is_some_and(|&v| self.unit[v] == NO_UNIT) {
            path.pop();
        }
        let lead = path.iter().take_while(|&&v| self.unit[v] == NO_UNIT).count();
        path.drain(..lead);
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, rng_from_seed};

    fn check(paths: &[Vec<Vertex>], matching: &[(Vertex, Vertex)], conn: &Connectors) {
        let mut seen = vec![0; matching.len()];
        for p in paths {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), p.len(), "repeated vertex");
            for w in p.windows(2) {
                let m = matching.iter().position(|&(a, b)| (a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]));
                match m {
                    Some(i) => seen[i] += 1,
                    None => assert!(conn.has(w[0], w[1]), "missing connector {w:?}"),
                }
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn dense_connectors_give_one_path() {
        let g = generators::gnp(80, 0.3, 2);
        let conn = Connectors::new(80, g.edges().iter().copied());
        let matching: Vec<(Vertex, Vertex)> = (0..20).map(|i| (2 * i, 2 * i + 1)).collect();
        let mut st = Stitcher::new(&conn, 50);
        let paths = st.stitch(&matching, &mut rng_from_seed(5));
        check(&paths, &matching, &conn);
        assert_eq!(paths.len(), 1);
    }

    #[test]
    fn sparse_connectors_still_cover() {
        for seed in 0..20 {
            let g = generators::gnp(60, 0.04, seed);
            let conn = Connectors::new(60, g.edges().iter().copied());
            let matching: Vec<(Vertex, Vertex)> = (0..25).map(|i| (2 * i + 1, 2 * i)).collect();
            let mut st = Stitcher::new(&conn, 20);
            let paths = st.stitch(&matching, &mut rng_from_seed(seed));
            check(&paths, &matching, &conn);
        }
    }

    #[test]
    fn no_connectors_means_singletons() {
        let conn = Connectors::new(6, []);
        let matching = [(0, 1), (2, 3), (4, 5)];
        let paths = Stitcher::new(&conn, 5).stitch(&matching, &mut rng_from_seed(0));
        assert_eq!(paths.len(), 3);
        check(&paths, &matching, &conn);
    }
}
