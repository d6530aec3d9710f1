use super::{ConstructError, ConstructionResult, Method};
use crate::bounds::forest_psn;
use crate::graph::{Graph, PathFamily, Vertex};

/// Optimal separator of a forest, of size `v1 + v2 - p`.
///
/// Path components contribute their single edges. Every other tree gets one
/// path between each pair of leaves adjacent in the cyclic DFS order (the
/// faces of the tree with an extra vertex joined to all leaves), after which
/// each degree-2 vertex cuts one path running through it.
pub fn separator_forest(g: &Graph) -> Result<ConstructionResult, ConstructError> {
    if !g.is_forest() {
        return Err(ConstructError::NotForest);
    }
    let mut seqs: Vec<Vec<Vertex>> = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        if comp.iter().all(|&v| g.degree(v) <= 2) {
            for &v in &comp {
                for &(w, _) in g.neighbors(v) {
                    if v < w {
                        seqs.push(vec![v, w]);
                    }
                }
            }
            continue;
        }
        let mut pieces = face_paths(g, &comp);
        for &w in comp.iter().filter(|&&v| g.degree(v) == 2) {
            let (i, pos) = pieces
                .iter()
                .enumerate()
                .find_map(|(i, p)| {
                    p.iter().position(|&v| v == w).filter(|&k| k > 0 && k + 1 < p.len()).map(|k| (i, k))
                })
                .expect("a degree-2 vertex stays interior to one of its face paths");
            let tail = pieces[i][pos..].to_vec();
            pieces[i].truncate(pos + 1);
            pieces.push(tail);
        }
        seqs.extend(pieces);
    }
    let family = PathFamily::from_sequences(g, seqs)?;
    let verified = crate::is_separator(g, &family)?;
    Ok(ConstructionResult {
        family,
        method: Method::Forest,
        claimed_bound: forest_psn(g).expect("checked forest"),
        retries: 0,
        patched: 0,
        verified,
    })
}

/// The leaf-to-leaf tree paths between cyclically consecutive leaves of the
/// tree spanned by `comp`, leaves ordered by a DFS from the smallest leaf.
/// Each edge of the tree lies on exactly two of them.
pub fn face_paths(g: &Graph, comp: &[Vertex]) -> Vec<Vec<Vertex>> {
    let root = *comp.iter().find(|&&v| g.degree(v) == 1).expect("trees with an edge have leaves");
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut leaves = Vec::new();
    // Iterative pre-order DFS honouring adjacency order.
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, from)) = stack.pop() {
        parent[v] = from;
        if from != usize::MAX {
            depth[v] = depth[from] + 1;
        }
        if g.degree(v) == 1 {
            leaves.push(v);
        }
        for &(w, _) in g.neighbors(v).iter().rev() {
            if w != from {
                stack.push((w, v));
            }
        }
    }
    let tree_path = |mut a: Vertex, mut b: Vertex| -> Vec<Vertex> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                front.push(a);
                a = parent[a];
            } else {
                back.push(b);
                b = parent[b];
            }
        }
        front.push(a);
        front.extend(back.into_iter().rev());
        front
    };
    (0..leaves.len()).map(|i| tree_path(leaves[i], leaves[(i + 1) % leaves.len()])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::{EdgeId, Path};

    #[test]
    fn star_needs_three() {
        let r = separator_forest(&generators::star(3)).unwrap();
        assert!(r.verified);
        assert_eq!(r.size(), 3);
    }

    #[test]
    fn paths_use_their_edges() {
        for k in 2..9 {
            let r = separator_forest(&generators::path(k)).unwrap();
            assert!(r.verified);
            assert_eq!(r.size(), k - 1);
        }
    }

    #[test]
    fn spider_three_legs() {
        let r = separator_forest(&generators::spider(3, 2)).unwrap();
        assert!(r.verified);
        assert_eq!(r.size(), 6);
    }

    #[test]
    fn face_paths_cover_each_edge_twice() {
        for seed in 0..40 {
            let t = generators::random_tree(25, seed);
            if t.max_degree() <= 2 {
                continue;
            }
            let comp: Vec<Vertex> = (0..25).collect();
            let faces = face_paths(&t, &comp);
            let leaves = t.degrees().iter().filter(|&&d| d == 1).count();
            assert_eq!(faces.len(), leaves);
            let mut count = vec![0; t.edge_count()];
            for f in &faces {
                let p = Path::new(&t, f.clone()).unwrap();
                for &EdgeId(e) in p.edges() {
                    count[e] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == 2), "seed {seed}");
        }
    }

    #[test]
    fn forests_mix_components() {
        let g = generators::spider(3, 2).disjoint_union(&generators::path(4)).disjoint_union(&Graph::empty(2));
        let r = separator_forest(&g).unwrap();
        assert!(r.verified);
        assert_eq!(r.size(), 6 + 3);
        assert_eq!(r.size(), r.claimed_bound);
    }

    #[test]
    fn rejects_cycles() {
        assert_eq!(separator_forest(&generators::cycle(5)), Err(ConstructError::NotForest));
    }
}
