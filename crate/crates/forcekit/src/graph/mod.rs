//! Immutable simple undirected graphs over dense 0-based vertex identifiers,
//! together with the compact vertex-set type used by every search in this
//! crate.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub mod io;
pub mod structure;

pub use io::{
    parse_edge_list, parse_graph6, parse_graph6_file, to_dot, to_edge_list, NodeCategory,
    ParseError,
};
pub use structure::{
    classify, find_pendent_generalized_stars, leaf_neighbors, pendent_paths, Classification,
    GraphClass, PendentGeneralizedStar,
};

/// Errors raised while constructing a [`Graph`] from raw edges.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A subset of the vertices of a graph on `n` vertices, bit-indexed for
/// constant-time membership tests and fast popcount.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a universe of `n` vertices.
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    /// The full vertex set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn with_members(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set lives in (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.bits[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    /// Cardinality (popcount over the flag words).
    pub fn card(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        out.difference_with(self);
        out
    }

    /// Low word of the flags, for the bitmask search engines (n <= 64).
    pub fn low_mask(&self) -> u64 {
        assert!(self.n <= 64);
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn from_low_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut s = VertexSet::new(n);
        if n > 0 {
            s.bits[0] = mask;
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An immutable simple undirected graph. Vertices are `0..n`; adjacency
/// lists are kept sorted. Graphs are never mutated after construction;
/// reductions produce new graphs that carry an id-mapping back to the
/// parent (see [`Subgraph`]).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, rejecting
    /// self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Graph with no vertices.
    pub fn empty() -> Self {
        Graph::from_edges(0, &[]).unwrap()
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as ordered pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Per-vertex adjacency bitmasks, available when n <= 64. The subset
    /// search engines run on these.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        )
    }

    /// The subgraph induced by `keep`, relabelled to dense identifiers,
    /// with the mapping back to the original ids.
    pub fn induced(&self, keep: &VertexSet) -> Subgraph {
        assert_eq!(keep.universe(), self.n);
        let orig_ids = keep.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (new, &old) in orig_ids.iter().enumerate() {
            local[old] = new;
        }
        let mut edges = Vec::new();
        for &u in &orig_ids {
            for &v in &self.adj[u] {
                if u < v && keep.contains(v) {
                    edges.push((local[u], local[v]));
                }
            }
        }
        let mut labels = BTreeMap::new();
        for &old in &orig_ids {
            if let Some(text) = self.labels.get(&old) {
                labels.insert(local[old], text.clone());
            }
        }
        let graph = Graph::from_edges(orig_ids.len(), &edges)
            .expect("induced subgraph of a simple graph is simple")
            .with_labels(labels);
        Subgraph { graph, orig_ids }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph together with the mapping from its dense local
/// identifiers back to the parent graph's identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `orig_ids[local] = original id`; ascending.
    pub orig_ids: Vec<usize>,
}

impl Subgraph {
    /// Wraps a whole graph as its own (identity) subgraph.
    pub fn identity(g: &Graph) -> Self {
        Subgraph {
            graph: g.clone(),
            orig_ids: (0..g.n()).collect(),
        }
    }

    pub fn original_id(&self, local: usize) -> usize {
        self.orig_ids[local]
    }

    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.orig_ids.binary_search(&original).ok()
    }

    pub fn contains_original(&self, original: usize) -> bool {
        self.local_id(original).is_some()
    }

    /// Translates a set of local ids into the parent's id space.
    pub fn to_original_set(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::with_members(parent_n, local.iter().map(|v| self.orig_ids[v]))
    }
}
