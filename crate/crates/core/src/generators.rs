//! Deterministic and seeded instance generators.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

/// Seeded generator shared by every randomized routine in the crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("generator produced a simple graph")
}

/// `P_k`: `k` vertices in a line.
pub fn path(k: usize) -> Graph {
    build(k, (1..k).map(|i| (i - 1, i)).collect())
}

/// `K_{1,k}` with centre `0`.
pub fn star(k: usize) -> Graph {
    build(k + 1, (1..=k).map(|i| (0, i)).collect())
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need three vertices");
    build(k, (0..k).map(|i| (i, (i + 1) % k)).collect())
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
}

/// `Q_d`: vertex `x` has the binary expansion of `x` as coordinates.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let edges = (0..n)
        .flat_map(|x| (0..d).filter(move |&j| x & (1 << j) == 0).map(move |j| (x, x | (1 << j))))
        .collect();
    build(n, edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, edges)
}

/// A centre with `legs` pendant paths of `leg_len` edges each.
pub fn spider(legs: usize, leg_len: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..leg_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(next, edges)
}

/// `G(n, p)`: each pair independently with probability `p`, pairs in
/// lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]");
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Tree encoded by a Prüfer sequence over `0..n` (length `n - 2`).
pub fn tree_from_prufer(n: usize, code: &[Vertex]) -> Graph {
    assert!(n >= 2 && code.len() == n - 2 && code.iter().all(|&v| v < n));
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    build(n, edges)
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        _ => {
            let mut rng = rng_from_seed(seed);
            let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(n, &code)
        }
    }
}

/// Random tree with each edge kept independently with probability `keep`.
pub fn random_forest(n: usize, keep: f64, seed: u64) -> Graph {
    let tree = random_tree(n, seed);
    let mut rng = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let edges = tree.edges().iter().copied().filter(|_| rng.gen_bool(keep)).collect();
    build(n, edges)
}

/// A tree on `n` vertices minimising `v1 + v2`: a caterpillar whose spine
/// vertices all have degree 3, with one leaf edge subdivided when `n` is odd.
/// For `n ≤ 3` the only trees are paths.
pub fn extremal_tree(n: usize) -> Graph {
    if n <= 3 {
        return path(n);
    }
    if n % 2 == 1 {
        // Subdividing a pendant edge adds exactly one degree-2 vertex.
        let base = extremal_tree(n - 1);
        let mut edges: Vec<(Vertex, Vertex)> = base.edges().to_vec();
        let (pos, &(u, v)) = edges
            .iter()
            .enumerate()
            .find(|(_, &(u, v))| base.degree(u) == 1 || base.degree(v) == 1)
            .expect("trees have leaves");
        edges[pos] = (u, n - 1);
        edges.push((n - 1, v));
        return build(n, edges);
    }
    let spine = n / 2 - 1;
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        let leaves = if spine == 1 {
            3
        } else if s == 0 || s == spine - 1 {
            2
        } else {
            1
        };
        for _ in 0..leaves {
            edges.push((s, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    build(n, edges)
}
