//! Path covers used as building blocks by the separator constructions.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Path, PathFamily, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("need at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("graph is not the complete graph K_{0} on vertices 0..{0}")]
    NotComplete(usize),
    #[error("graph is not the hypercube Q_{0} in binary labelling")]
    NotHypercube(usize),
}

/// Edge-disjoint paths covering every edge of `g`.
///
/// Two covers are built and the smaller one is returned. The first pairs
/// odd-degree vertices by virtual edges, tours the resulting Eulerian
/// multigraph and cuts the tour at virtual edges and repeated vertices; this
/// is near-optimal on sparse graphs. The second peels long paths greedily,
/// using rotations when an end gets stuck, which suits dense graphs. Both
/// finish by merging paths that meet end to end.
pub fn path_cover(g: &Graph) -> PathFamily {
    let mut toured: Vec<Vec<Vertex>> = Vec::new();
    for trail in euler_trails(g) {
        split_trail(&trail, &mut toured);
    }
    merge_end_to_end(g.vertex_count(), &mut toured);
    let mut peeled = peel_paths(g);
    merge_end_to_end(g.vertex_count(), &mut peeled);
    let best = if peeled.len() < toured.len() { peeled } else { toured };
    best.into_iter().map(|vs| Path::new(g, vs).expect("cover pieces are simple paths")).collect()
}

/// Rotations tried per stuck end while peeling.
const PEEL_ROTATIONS: usize = 32;

/// Repeatedly removes a long path from the remaining edges. Each path starts
/// at an odd-degree vertex when one exists, extends towards neighbours of
/// highest remaining degree, grows from both ends, and uses Pósa rotations
/// (closing the end onto an interior vertex and reversing the tail) to find
/// a new extendable end.
fn peel_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut alive = vec![true; g.edge_count()];
    let mut deg = g.degrees();
    let mut pos = vec![usize::MAX; n];
    let mut out = Vec::new();
    loop {
        let start = (0..n)
            .filter(|&v| deg[v] % 2 == 1)
            .min_by_key(|&v| deg[v])
            .or_else(|| (0..n).filter(|&v| deg[v] > 0).min_by_key(|&v| deg[v]));
        let Some(start) = start else { break };
        let mut path = vec![start];
        pos[start] = 0;
        let mut reversed_once = false;
        let mut rotations = 0;
        loop {
            let x = *path.last().expect("nonempty");
            let next = g
                .neighbors(x)
                .iter()
                .filter(|&&(w, e)| alive[e.0] && pos[w] == usize::MAX)
                .max_by_key(|&&(w, _)| deg[w])
                .map(|&(w, _)| w);
            if let Some(w) = next {
                pos[w] = path.len();
                path.push(w);
                rotations = 0;
                continue;
            }
            if !reversed_once {
                reversed_once = true;
                path.reverse();
                for (i, &v) in path.iter().enumerate() {
                    pos[v] = i;
                }
                continue;
            }
            // Rotate on an alive edge from the end to an interior vertex.
            let k = path.len() - 1;
            let pivot = g
                .neighbors(x)
                .iter()
                .filter(|&&(w, e)| alive[e.0] && pos[w] != usize::MAX && pos[w] + 1 < k)
                .map(|&(w, _)| pos[w])
                .find(|&i| {
                    let end = path[i + 1];
                    g.neighbors(end).iter().any(|&(w, e)| alive[e.0] && pos[w] == usize::MAX)
                });
            match pivot {
                Some(i) if rotations < PEEL_ROTATIONS => {
                    path[i + 1..].reverse();
                    for (j, &v) in path.iter().enumerate().skip(i + 1) {
                        pos[v] = j;
                    }
                    rotations += 1;
                }
                _ => break,
            }
        }
        for w in path.windows(2) {
            let e = g.edge_between(w[0], w[1]).expect("path follows edges");
            alive[e.0] = false;
            deg[w[0]] -= 1;
            deg[w[1]] -= 1;
        }
        for &v in &path {
            pos[v] = usize::MAX;
        }
        out.push(path);
    }
    out
}

/// Trails (vertex sequences) partitioning `E(g)`; each has at least one edge.
fn euler_trails(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    // Multigraph adjacency: (neighbor, edge slot); slots >= m are virtual.
    let mut adj: Vec<Vec<(Vertex, usize)>> =
        (0..n).map(|v| g.neighbors(v).iter().map(|&(w, e)| (w, e.0)).collect()).collect();
    let mut slots = m;
    for comp in g.components() {
        let odd: Vec<Vertex> = comp.iter().copied().filter(|&v| g.degree(v) % 2 == 1).collect();
        for pair in odd.chunks(2) {
            adj[pair[0]].push((pair[1], slots));
            adj[pair[1]].push((pair[0], slots));
            slots += 1;
        }
    }

    let mut used = vec![false; slots];
    let mut cursor = vec![0usize; n];
    let mut trails = Vec::new();
    for comp in g.components() {
        let start = comp[0];
        if g.degree(start) == 0 && comp.len() == 1 {
            continue;
        }
        // Hierholzer, recording the slot used to enter each vertex.
        let mut stack: Vec<(Vertex, Option<usize>)> = vec![(start, None)];
        let mut circuit: Vec<(Vertex, Option<usize>)> = Vec::new();
        while let Some(&(v, _)) = stack.last() {
            let mut advanced = false;
            while cursor[v] < adj[v].len() {
                let (w, slot) = adj[v][cursor[v]];
                cursor[v] += 1;
                if !used[slot] {
                    used[slot] = true;
                    stack.push((w, Some(slot)));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                circuit.push(stack.pop().expect("non-empty"));
            }
        }
        circuit.reverse();
        if circuit.len() < 2 {
            continue;
        }
        // circuit[i].1 is the slot joining circuit[i-1] to circuit[i].
        let steps: Vec<(Vertex, usize)> = circuit[1..].iter().map(|&(v, s)| (v, s.expect("entered"))).collect();
        let first_virtual = steps.iter().position(|&(_, s)| s >= m);
        match first_virtual {
            None => {
                let mut trail = vec![circuit[0].0];
                trail.extend(steps.iter().map(|&(v, _)| v));
                trails.push(trail);
            }
            Some(k) => {
                // Rotate so the tour starts just after a virtual edge.
                let len = steps.len();
                let mut current = vec![steps[k].0];
                for i in 1..=len {
                    let (v, s) = steps[(k + i) % len];
                    if s >= m {
                        if current.len() > 1 {
                            trails.push(std::mem::take(&mut current));
                        }
                        current = vec![v];
                    } else {
                        current.push(v);
                    }
                }
                if current.len() > 1 {
                    trails.push(current);
                }
            }
        }
    }
    trails
}

/// Greedily cuts a trail into maximal vertex-simple pieces.
fn split_trail(trail: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
    let mut current: Vec<Vertex> = vec![trail[0]];
    let mut on_piece: HashSet<Vertex> = HashSet::from([trail[0]]);
    for &v in &trail[1..] {
        if on_piece.contains(&v) {
            let last = *current.last().expect("non-empty");
            out.push(std::mem::replace(&mut current, vec![last]));
            on_piece.clear();
            on_piece.insert(last);
        }
        current.push(v);
        on_piece.insert(v);
    }
    if current.len() > 1 {
        out.push(current);
    }
}

/// Concatenates pairs of paths sharing exactly one vertex that is an endpoint of both.
fn merge_end_to_end(n: usize, pieces: &mut Vec<Vec<Vertex>>) {
    let mut mark = vec![usize::MAX; n];
    loop {
        let mut by_end: HashMap<Vertex, Vec<usize>> = HashMap::new();
        for (i, p) in pieces.iter().enumerate() {
            by_end.entry(p[0]).or_default().push(i);
            by_end.entry(*p.last().expect("non-empty")).or_default().push(i);
        }
        let mut ends: Vec<_> = by_end.into_iter().collect();
        ends.sort_unstable();
        let mut merged = None;
        'search: for (v, ids) in &ends {
            for (a, &i) in ids.iter().enumerate() {
                for &j in &ids[a + 1..] {
                    if i == j {
                        continue;
                    }
                    for &u in &pieces[i] {
                        mark[u] = i;
                    }
                    let shared = pieces[j].iter().filter(|&&u| mark[u] == i).count();
                    for &u in &pieces[i] {
                        mark[u] = usize::MAX;
                    }
                    if shared == 1 {
                        merged = Some((*v, i, j));
                        break 'search;
                    }
                }
            }
        }
        let Some((v, i, j)) = merged else { break };
        let mut a = pieces[i].clone();
        let mut b = pieces[j].clone();
        if a[0] == v {
            a.reverse();
        }
        if *b.last().expect("non-empty") == v {
            b.reverse();
        }
        a.extend_from_slice(&b[1..]);
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        pieces.remove(hi);
        pieces[lo] = a;
    }
}

/// Vertex sequences of `⌈n/2⌉` edge-disjoint paths covering `K_n` on `0..n`.
///
/// For even `n` these are the Walecki zigzag Hamilton paths. For odd `n` the
/// Hamilton cycles through the extra vertex `n-1` each drop one rotated copy
/// of the edge `{0, 1}`; the dropped edges form the path `0, 1, …, ⌊n/2⌋`.
pub fn walecki_sequences(n: usize) -> Result<Vec<Vec<Vertex>>, CoverError> {
    if n < 2 {
        return Err(CoverError::TooSmall { min: 2, got: n });
    }
    let even = n - n % 2;
    let zigzag = |k: usize| -> Vec<Vertex> {
        let mut seq = Vec::with_capacity(even);
        seq.push(k);
        for i in 1..even {
            let step = i.div_ceil(2);
            let v = if i % 2 == 1 { k + step } else { k + even - step };
            seq.push(v % even);
        }
        seq
    };
    if n % 2 == 0 {
        return Ok((0..n / 2).map(zigzag).collect());
    }
    let hub = n - 1;
    let mut out = Vec::with_capacity(n.div_ceil(2));
    for k in 0..even / 2 {
        // Cycle hub, z_0 = k, z_1 = k+1, …, z_last, hub; dropping {k, k+1} leaves
        // the path k, hub, z_last, …, z_1.
        let z = zigzag(k);
        let mut seq = vec![z[0], hub];
        seq.extend(z[1..].iter().rev());
        out.push(seq);
    }
    out.push((0..=even / 2).collect());
    Ok(out)
}

/// Walecki cover of `g`, which must be `K_n` on vertices `0..n`.
pub fn walecki_paths(g: &Graph) -> Result<PathFamily, CoverError> {
    let n = g.vertex_count();
    if g.edge_count() != n * n.saturating_sub(1) / 2 {
        return Err(CoverError::NotComplete(n));
    }
    let seqs = walecki_sequences(n)?;
    PathFamily::from_sequences(g, seqs).map_err(|_| CoverError::NotComplete(n))
}

/// Reflected binary Gray code order of `0..2^d`: a Hamilton path of `Q_d`.
pub fn gray_code_order(d: usize) -> Vec<Vertex> {
    (0..1usize << d).map(|i| i ^ (i >> 1)).collect()
}

/// The Gray-code Hamilton path of `g = Q_d`.
pub fn hamilton_path_hypercube(g: &Graph, d: usize) -> Result<Path, CoverError> {
    check_hypercube(g, d)?;
    Path::new(g, gray_code_order(d)).map_err(|_| CoverError::NotHypercube(d))
}

pub(crate) fn check_hypercube(g: &Graph, d: usize) -> Result<(), CoverError> {
    if d == 0 || !crate::detect::is_hypercube_of_dim(g, d) {
        return Err(CoverError::NotHypercube(d));
    }
    Ok(())
}

/// Zigzag along the Gray Hamilton path of the lower half of `Q_d` and its
/// mirror, switching halves across the crossing edge at each listed position
/// (positions index `gray_code_order(d-1)`).
pub(crate) fn zigzag_sequence(d: usize, crossings: &[bool], start_high: bool) -> Vec<Vertex> {
    let top = 1usize << (d - 1);
    let order = gray_code_order(d - 1);
    let mut side = if start_high { top } else { 0 };
    let mut seq = Vec::with_capacity(order.len() + crossings.len());
    for (k, &v) in order.iter().enumerate() {
        seq.push(v | side);
        if crossings[k] {
            side ^= top;
            seq.push(v | side);
        }
    }
    seq
}

/// `d` paths of `Q_d` (binary labelling) covering every edge; paths may share
/// edges. Built recursively: the cover of the lower half is joined to its
/// mirror through one crossing edge per path, then one zigzag picks up every
/// crossing edge.
pub fn hypercube_cover_sequences(d: usize) -> Vec<Vec<Vertex>> {
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![vec![0, 1]];
    }
    if d == 2 {
        return vec![vec![0, 1, 3], vec![0, 2, 3]];
    }
    let top = 1usize << (d - 1);
    let mut out: Vec<Vec<Vertex>> = hypercube_cover_sequences(d - 1)
        .into_iter()
        .map(|p| {
            let mut seq = p.clone();
            seq.extend(p.iter().rev().map(|&v| v | top));
            seq
        })
        .collect();
    out.push(zigzag_sequence(d, &vec![true; top], false));
    out
}

pub fn hypercube_cover(g: &Graph, d: usize) -> Result<PathFamily, CoverError> {
    check_hypercube(g, d)?;
    PathFamily::from_sequences(g, hypercube_cover_sequences(d)).map_err(|_| CoverError::NotHypercube(d))
}

/// Cuts every path into consecutive pieces of at most `max_len` edges.
pub fn cut_paths(fam: &PathFamily, max_len: usize) -> PathFamily {
    assert!(max_len >= 1, "pieces need at least one edge");
    fam.iter()
        .flat_map(|p| {
            (0..p.len()).step_by(max_len).map(move |start| p.slice(start, (start + max_len).min(p.len())))
        })
        .collect()
}

/// Partition check shared by tests and constructions: every edge exactly once.
pub fn is_edge_partition(g: &Graph, fam: &PathFamily) -> bool {
    let mut count = vec![0usize; g.edge_count()];
    for p in fam {
        for &EdgeId(e) in p.edges() {
            count[e] += 1;
        }
    }
    count.iter().all(|&c| c == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn covers(g: &Graph, fam: &PathFamily) -> bool {
        let mut seen = vec![false; g.edge_count()];
        for p in fam {
            for &e in p.edges() {
                seen[e.0] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    #[test]
    fn cycle_cover_has_two_paths() {
        let g = generators::cycle(4);
        let fam = path_cover(&g);
        assert_eq!(fam.len(), 2);
        assert!(is_edge_partition(&g, &fam));
    }

    #[test]
    fn path_graph_cover_is_one_path() {
        let g = generators::path(5);
        let fam = path_cover(&g);
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.paths()[0].len(), 4);
    }

    #[test]
    fn petersen_cover() {
        let g = generators::petersen();
        let fam = path_cover(&g);
        assert!(is_edge_partition(&g, &fam));
        assert!(fam.len() <= 10, "{} paths", fam.len());
    }

    #[test]
    fn at_most_n_paths_on_corpus() {
        let mut corpus = vec![generators::petersen(), generators::complete(9), generators::hypercube(6)];
        for (i, &(n, p)) in [(40, 0.1), (120, 0.05), (150, 0.3), (200, 0.5), (281, 0.5), (120, 0.9)].iter().enumerate() {
            corpus.push(generators::gnp(n, p, i as u64));
        }
        for s in 0..5 {
            corpus.push(generators::random_tree(60, s));
            corpus.push(generators::random_forest(80, 0.7, s));
        }
        for g in corpus {
            let fam = path_cover(&g);
            assert!(is_edge_partition(&g, &fam));
            assert!(fam.len() <= g.vertex_count(), "{} paths on n = {}", fam.len(), g.vertex_count());
        }
    }

    #[test]
    fn empty_graph_cover() {
        assert!(path_cover(&Graph::empty(4)).is_empty());
    }

    #[test]
    fn walecki_small_cases() {
        for (n, sizes) in [(4, vec![3, 3]), (5, vec![4, 4, 2]), (6, vec![5, 5, 5])] {
            let g = generators::complete(n);
            let fam = walecki_paths(&g).unwrap();
            assert_eq!(fam.iter().map(Path::len).collect::<Vec<_>>(), sizes);
            assert!(is_edge_partition(&g, &fam));
        }
        assert!(walecki_sequences(1).is_err());
    }

    #[test]
    fn walecki_counts_up_to_64() {
        for n in 2..=64 {
            let g = generators::complete(n);
            let fam = walecki_paths(&g).unwrap();
            assert_eq!(fam.len(), n.div_ceil(2), "n = {n}");
            assert!(is_edge_partition(&g, &fam), "n = {n}");
        }
    }

    #[test]
    fn gray_paths() {
        assert_eq!(gray_code_order(1), vec![0, 1]);
        assert_eq!(gray_code_order(2), vec![0b00, 0b01, 0b11, 0b10]);
        let g = generators::hypercube(3);
        let p = hamilton_path_hypercube(&g, 3).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert!(p.vertices().windows(2).all(|w| (w[0] ^ w[1]).count_ones() == 1));
    }

    #[test]
    fn hypercube_covers() {
        assert_eq!(hypercube_cover_sequences(1), vec![vec![0, 1]]);
        for d in 1..=10 {
            let g = generators::hypercube(d);
            let fam = hypercube_cover(&g, d).unwrap();
            assert!(fam.len() <= d);
            assert!(covers(&g, &fam), "d = {d}");
        }
        let q2 = generators::hypercube(2);
        let fam = hypercube_cover(&q2, 2).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(is_edge_partition(&q2, &fam));
    }

    #[test]
    fn hypercube_rejects_other_graphs() {
        assert!(hypercube_cover(&generators::cycle(5), 2).is_err());
    }

    #[test]
    fn cutting() {
        let g = generators::path(11);
        let fam = PathFamily::from_sequences(&g, [(0..11).collect()]).unwrap();
        let cut = cut_paths(&fam, 4);
        assert_eq!(cut.iter().map(Path::len).collect::<Vec<_>>(), vec![4, 4, 2]);
        let short = PathFamily::from_sequences(&g, [vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(cut_paths(&short, 5), short);
    }

    #[test]
    fn cutting_k8_cover() {
        let g = generators::complete(8);
        let fam = walecki_paths(&g).unwrap();
        let cut = cut_paths(&fam, 28usize.div_ceil(8));
        assert!(cut.len() <= 16);
        assert!(cut.iter().all(|p| p.len() <= 4));
        assert!(is_edge_partition(&g, &cut));
    }
}
