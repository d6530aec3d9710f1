use super::{ConstructError, ConstructionResult, Method};
use crate::cover::{gray_code_order, hypercube_cover_sequences, zigzag_sequence};
use crate::detect::hypercube_dimension;
use crate::graph::{Graph, PathFamily, Vertex};

/// The three groups of the top recursion level of the hypercube separator of
/// `Q_d`, as vertex sequences. Vertices are binary coordinate vectors and the
/// split is on the highest bit: `Q^0` is `0..2^(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeGroups {
    /// Each path of the `Q_{d-1}` separator glued to its mirror image through
    /// the crossing edge at one of its endpoints.
    pub joins: Vec<Vec<Vertex>>,
    /// A cover of `Q^0` and the mirror image of that cover.
    pub cover: Vec<Vec<Vertex>>,
    /// Zigzags through subsets of crossing edges: two through all of them,
    /// then two per code bit.
    pub crossing: Vec<Vec<Vertex>>,
}

impl HypercubeGroups {
    pub fn len(&self) -> usize {
        self.joins.len() + self.cover.len() + self.crossing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn into_sequences(self) -> Vec<Vec<Vertex>> {
        let mut out = self.joins;
        out.extend(self.cover);
        out.extend(self.crossing);
        out
    }
}

/// Size of a maximum matching of paths to distinct endpoints, with the
/// endpoint chosen for each matched path.
fn end_matching(ends: &[[Vertex; 2]], vertex_count: usize) -> (usize, Vec<Option<Vertex>>) {
    fn augment(
        p: usize,
        ends: &[[Vertex; 2]],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
        choice: &mut [Option<Vertex>],
    ) -> bool {
        for v in ends[p] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|q| augment(q, ends, owner, seen, choice)) {
                owner[v] = Some(p);
                choice[p] = Some(v);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; vertex_count];
    let mut choice = vec![None; ends.len()];
    let mut size = 0;
    for p in 0..ends.len() {
        let mut seen = vec![false; vertex_count];
        size += usize::from(augment(p, ends, &mut owner, &mut seen, &mut choice));
    }
    (size, choice)
}

fn ends_of(p: &[Vertex]) -> [Vertex; 2] {
    [p[0], *p.last().expect("nonempty path")]
}

/// Picks the join endpoint of every path of the `Q_{d-1}` separator. First
/// priority is the number of distinct join vertices, i.e. crossing edges with
/// a private join path. Second is the same quantity one level up, where the
/// far ends `y` and `y + 2^(d-1)` of each joined path become endpoints.
fn choose_join_ends(paths: &[Vec<Vertex>], d: usize) -> Vec<Vertex> {
    let top = 1usize << (d - 1);
    let ends: Vec<[Vertex; 2]> = paths.iter().map(|p| ends_of(p)).collect();
    let (_, matched) = end_matching(&ends, top);
    let mut pick: Vec<usize> =
        matched.iter().zip(&ends).map(|(c, e)| usize::from(c.is_some_and(|v| v == e[1]))).collect();

    // Endpoints of the level-d paths that do not depend on the choice.
    let mut fixed: Vec<[Vertex; 2]> = hypercube_cover_sequences(d - 1)
        .iter()
        .flat_map(|p| {
            let [a, b] = ends_of(p);
            [[a, b], [a | top, b | top]]
        })
        .collect();
    for high in [false, true] {
        fixed.push(ends_of(&zigzag_sequence(d, &vec![true; top], high)));
    }
    let score = |pick: &[usize]| {
        let mut seen = vec![false; top];
        let mut next = fixed.clone();
        for (e, &k) in ends.iter().zip(pick) {
            seen[e[k]] = true;
            let far = e[1 - k];
            next.push([far, far | top]);
        }
        (seen.iter().filter(|&&b| b).count(), end_matching(&next, 2 * top).0)
    };
    let mut best = score(&pick);
    loop {
        let mut improved = false;
        for i in 0..pick.len() {
            pick[i] ^= 1;
            let s = score(&pick);
            if s > best {
                best = s;
                improved = true;
            } else {
                pick[i] ^= 1;
            }
        }
        if !improved {
            break;
        }
    }
    ends.iter().zip(pick).map(|(e, k)| e[k]).collect()
}

/// Smallest `len` such that weight-`⌊len/2⌋` words (weight at least 1) of
/// that length number at least `count`, and the words themselves in
/// lexicographic order of their bit patterns.
fn middle_layer_codes(count: usize) -> (usize, Vec<usize>) {
    if count == 0 {
        return (0, Vec::new());
    }
    let mut len = 1;
    loop {
        let weight = (len / 2).max(1);
        let codes: Vec<usize> = (0..1usize << len).filter(|c| c.count_ones() as usize == weight).collect();
        if codes.len() >= count {
            return (len, codes.into_iter().take(count).collect());
        }
        len += 1;
    }
}

fn separator_sequences(d: usize) -> Vec<Vec<Vertex>> {
    match d {
        0 => Vec::new(),
        1 => vec![vec![0, 1]],
        2 => vec![vec![0, 1], vec![1, 3], vec![3, 2], vec![2, 0]],
        _ => groups(d).into_sequences(),
    }
}

fn groups(d: usize) -> HypercubeGroups {
    let top = 1usize << (d - 1);
    let lower = separator_sequences(d - 1);
    let ends = choose_join_ends(&lower, d);

    let mut joined = vec![false; top];
    let joins = lower
        .into_iter()
        .zip(&ends)
        .map(|(mut p, &x)| {
            joined[x] = true;
            if p[0] == x {
                p.reverse();
            }
            let mirror: Vec<Vertex> = p.iter().rev().map(|&v| v | top).collect();
            p.extend(mirror);
            p
        })
        .collect();

    let mut cover = hypercube_cover_sequences(d - 1);
    let mirrored: Vec<Vec<Vertex>> = cover.iter().map(|p| p.iter().map(|&v| v | top).collect()).collect();
    cover.extend(mirrored);

    let mut crossing = vec![zigzag_sequence(d, &vec![true; top], false), zigzag_sequence(d, &vec![true; top], true)];
    // Crossing edges without a join path of their own get pairwise
    // incomparable nonempty codes; one zigzag pair per code bit.
    let order = gray_code_order(d - 1);
    let bare: Vec<usize> = (0..top).filter(|&k| !joined[order[k]]).collect();
    let (len, codes) = middle_layer_codes(bare.len());
    for bit in 0..len {
        let mut marks = vec![false; top];
        for (&k, &code) in bare.iter().zip(&codes) {
            marks[k] = (code >> bit) & 1 == 1;
        }
        if marks.iter().any(|&b| b) {
            crossing.push(zigzag_sequence(d, &marks, false));
            crossing.push(zigzag_sequence(d, &marks, true));
        }
    }
    HypercubeGroups { joins, cover, crossing }
}

/// The groups of the top recursion level for `Q_d`, `d ≥ 3`.
pub fn hypercube_groups(d: usize) -> Option<HypercubeGroups> {
    (d >= 3).then(|| groups(d))
}

/// Separator of the hypercube `Q_d` (`d ≥ 2`, binary labelling).
pub fn separator_hypercube(g: &Graph) -> Result<ConstructionResult, ConstructError> {
    let d = hypercube_dimension(g).filter(|&d| d >= 2).ok_or(ConstructError::NotHypercube)?;
    let family = PathFamily::from_sequences(g, separator_sequences(d))?;
    let verified = crate::is_separator(g, &family)?;
    Ok(ConstructionResult {
        family,
        method: Method::Hypercube,
        claimed_bound: 2 * d * (d + 1) - 8,
        retries: 0,
        patched: 0,
        verified,
    })
}
