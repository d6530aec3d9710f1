//! Per-edge membership signatures stored as packed bit rows.

use crate::graph::{EdgeId, FamilyError, Graph, PathFamily};

/// For every edge, the set of family indices whose path contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureTable {
    family_size: usize,
    words: usize,
    bits: Vec<u64>,
    /// `members[i]` lists the edges of path `i`, deduplicated.
    members: Vec<Vec<EdgeId>>,
}

impl SignatureTable {
    pub fn build(g: &Graph, fam: &PathFamily) -> Result<Self, FamilyError> {
        fam.check_graph(g)?;
        let family_size = fam.len();
        let words = family_size.div_ceil(64).max(1);
        let mut bits = vec![0u64; words * g.edge_count()];
        let mut members = Vec::with_capacity(family_size);
        for (i, p) in fam.iter().enumerate() {
            let mut list = Vec::with_capacity(p.len());
            for &e in p.edges() {
                let slot = &mut bits[e.0 * words + i / 64];
                if *slot & (1 << (i % 64)) == 0 {
                    *slot |= 1 << (i % 64);
                    list.push(e);
                }
            }
            members.push(list);
        }
        Ok(SignatureTable { family_size, words, bits, members })
    }

    pub fn family_size(&self) -> usize {
        self.family_size
    }

    pub fn edge_count(&self) -> usize {
        self.bits.len() / self.words
    }

    #[inline]
    pub fn row(&self, e: EdgeId) -> &[u64] {
        &self.bits[e.0 * self.words..(e.0 + 1) * self.words]
    }

    #[inline]
    pub fn contains(&self, e: EdgeId, i: usize) -> bool {
        self.row(e)[i / 64] & (1 << (i % 64)) != 0
    }

    /// Family indices containing `e`, ascending.
    pub fn indices(&self, e: EdgeId) -> impl Iterator<Item = usize> + '_ {
        self.row(e).iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn weight(&self, e: EdgeId) -> usize {
        self.row(e).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `signature(e) ⊆ signature(f)`.
    #[inline]
    pub fn is_subset(&self, e: EdgeId, f: EdgeId) -> bool {
        self.row(e).iter().zip(self.row(f)).all(|(a, b)| a & !b == 0)
    }

    pub fn edges_of(&self, i: usize) -> &[EdgeId] {
        &self.members[i]
    }

    /// Total stored memberships.
    pub fn total_memberships(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the row of `e` equals an explicit index set (sorted or not).
    pub fn equals_set(&self, e: EdgeId, set: &[usize]) -> bool {
        let mut row = vec![0u64; self.words];
        for &i in set {
            if i >= self.family_size {
                return false;
            }
            row[i / 64] |= 1 << (i % 64);
        }
        row == self.row(e)
    }

    /// Whether `set ⊆ signature(e)`.
    pub fn contains_all(&self, e: EdgeId, set: &[usize]) -> bool {
        set.iter().all(|&i| i < self.family_size && self.contains(e, i))
    }
}
