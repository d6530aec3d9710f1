//! Simple undirected graphs with stable edge identifiers, vertex-simple paths
//! and indexed path families.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertices are dense integers `0..n`.
pub type Vertex = usize;

/// Position of an edge in the graph's edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u}, {v}) has a vertex outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("a path needs at least two vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {vertex} repeated at position {position}")]
    RepeatedVertex { vertex: Vertex, position: usize },
    #[error("({u}, {v}) at position {position} is not an edge")]
    NotAdjacent { u: Vertex, v: Vertex, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("path {index}: {source}")]
    InvalidPath {
        index: usize,
        #[source]
        source: PathError,
    },
    #[error("path {index} does not belong to this graph")]
    ForeignPath { index: usize },
}

#[inline]
fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An immutable simple undirected graph.
///
/// Edge `i` of the input list gets `EdgeId(i)`; adjacency lists keep insertion
/// order, which several constructions rely on for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    lookup: HashMap<(Vertex, Vertex), EdgeId>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut lookup = HashMap::new();
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let id = EdgeId(edges.len());
            if lookup.insert(key(u, v), id).is_some() {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph { n, edges, adjacency, lookup })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adjacency: vec![Vec::new(); n], lookup: HashMap::new() }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e.0]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.lookup.get(&key(u, v)).copied()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Subgraph on the same vertex set keeping the given edges, in the given order.
    /// Returns the subgraph and, for each of its edges, the id in `self`.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let g = Graph::new(self.n, keep.iter().map(|&e| self.edges[e.0]))
            .expect("subgraph of a simple graph is simple");
        (g, keep.to_vec())
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs is simple")
    }
}

/// A vertex-simple path with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl Path {
    /// Validates `vertices` as a path of `g`, reporting the first violation.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self, PathError> {
        if vertices.len() < 2 {
            return Err(PathError::TooShort(vertices.len()));
        }
        let mut seen = vec![false; g.vertex_count()];
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for (position, &vertex) in vertices.iter().enumerate() {
            if vertex >= g.vertex_count() {
                return Err(PathError::VertexOutOfRange { vertex, n: g.vertex_count() });
            }
            if std::mem::replace(&mut seen[vertex], true) {
                return Err(PathError::RepeatedVertex { vertex, position });
            }
            if position > 0 {
                let u = vertices[position - 1];
                let e = g
                    .edge_between(u, vertex)
                    .ok_or(PathError::NotAdjacent { u, v: vertex, position: position - 1 })?;
                edges.push(e);
            }
        }
        Ok(Path { vertices, edges })
    }

    /// The single-edge path along `e`.
    pub fn from_edge(g: &Graph, e: EdgeId) -> Self {
        let (u, v) = g.endpoints(e);
        Path { vertices: vec![u, v], edges: vec![e] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Number of edges.
    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Paths always carry an edge; kept for clippy's `len_without_is_empty`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("non-empty")
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Path { vertices, edges }
    }

    /// Sub-path covering edges `start..end` (edge indices along the path).
    pub fn slice(&self, start: usize, end: usize) -> Path {
        assert!(start < end && end <= self.edges.len());
        Path { vertices: self.vertices[start..=end].to_vec(), edges: self.edges[start..end].to_vec() }
    }

    /// Checks that the stored edge ids match `g`.
    pub(crate) fn belongs_to(&self, g: &Graph) -> bool {
        self.edges.iter().zip(self.vertices.windows(2)).all(|(&e, w)| {
            e.0 < g.edge_count() && key(w[0], w[1]) == key(g.edges[e.0].0, g.edges[e.0].1)
        }) && self.vertices.iter().all(|&v| v < g.vertex_count())
    }
}

/// An indexed list of paths over one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathFamily {
    paths: Vec<Path>,
}

impl PathFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_paths(paths: Vec<Path>) -> Self {
        PathFamily { paths }
    }

    /// Validates raw vertex sequences against `g`.
    pub fn from_sequences<I>(g: &Graph, sequences: I) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let paths = sequences
            .into_iter()
            .enumerate()
            .map(|(index, vs)| Path::new(g, vs).map_err(|source| FamilyError::InvalidPath { index, source }))
            .collect::<Result<_, _>>()?;
        Ok(PathFamily { paths })
    }

    /// Every edge of `g` as its own path.
    pub fn singletons(g: &Graph) -> Self {
        PathFamily { paths: g.edge_ids().map(|e| Path::from_edge(g, e)).collect() }
    }

    pub fn push(&mut self, p: Path) {
        self.paths.push(p);
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = Path>) {
        self.paths.extend(other);
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Path> {
        self.paths.iter()
    }

    /// Total edge memberships, Σ |E(P_i)|.
    pub fn total_length(&self) -> usize {
        self.paths.iter().map(Path::len).sum()
    }

    /// Fails if any path's edge ids disagree with `g`.
    pub fn check_graph(&self, g: &Graph) -> Result<(), FamilyError> {
        match self.paths.iter().position(|p| !p.belongs_to(g)) {
            Some(index) => Err(FamilyError::ForeignPath { index }),
            None => Ok(()),
        }
    }
}

impl<'a> IntoIterator for &'a PathFamily {
    type Item = &'a Path;
    type IntoIter = std::slice::Iter<'a, Path>;

    fn into_iter(self) -> Self::IntoIter {
        self.paths.iter()
    }
}

impl FromIterator<Path> for PathFamily {
    fn from_iter<T: IntoIterator<Item = Path>>(iter: T) -> Self {
        PathFamily { paths: iter.into_iter().collect() }
    }
}
