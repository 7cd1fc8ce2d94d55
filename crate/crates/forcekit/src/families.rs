//! Named graph constructions, a seeded uniform random tree generator,
//! and an exhaustive stream of non-isomorphic trees for census and
//! property suites.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParameters { kind: &'static str, reason: String },
    #[error("unknown family kind: {0}")]
    UnknownKind(String),
    #[error("malformed family spec: {0}")]
    Malformed(String),
    #[error("tree enumeration capped at n <= {cap}, got {n}")]
    TooLarge { n: usize, cap: usize },
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        kind,
        reason: reason.into(),
    }
}

/// A named graph construction. Vertex numbering per kind is documented
/// on [`build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// A star with this many leaves.
    Star(usize),
    /// Leg lengths, each at least one.
    GeneralizedStar(Vec<usize>),
    Complete(usize),
    /// Part sizes, at least two parts.
    CompleteMultipartite(Vec<usize>),
    /// Rim length; the hub is a separate vertex.
    Wheel(usize),
    Empty(usize),
    /// Cycle length; one extra pendant hangs off vertex 0.
    CycleWithPendant(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    CoronaK1(Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses the compact CLI syntax, e.g. `path:5`, `genstar:1,1,3`,
    /// `kpartite:2,3`, `corona:path:3`, `join:complete:3+empty:3`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let text = text.trim();
        let (kind, rest) = match text.split_once(':') {
            Some((k, r)) => (k, r),
            None => (text, ""),
        };
        let count = |kind: &'static str| -> Result<usize, FamilyError> {
            rest.parse::<usize>()
                .map_err(|_| FamilyError::Malformed(format!("{kind} expects a count, got {rest:?}")))
        };
        let list = |kind: &'static str| -> Result<Vec<usize>, FamilyError> {
            rest.split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    FamilyError::Malformed(format!("{kind} expects a comma list, got {rest:?}"))
                })
        };
        match kind {
            "path" => Ok(FamilySpec::Path(count("path")?)),
            "cycle" => Ok(FamilySpec::Cycle(count("cycle")?)),
            "star" => Ok(FamilySpec::Star(count("star")?)),
            "genstar" => Ok(FamilySpec::GeneralizedStar(list("genstar")?)),
            "complete" => Ok(FamilySpec::Complete(count("complete")?)),
            "kpartite" => Ok(FamilySpec::CompleteMultipartite(list("kpartite")?)),
            "wheel" => Ok(FamilySpec::Wheel(count("wheel")?)),
            "empty" => Ok(FamilySpec::Empty(count("empty")?)),
            "cyclepend" => Ok(FamilySpec::CycleWithPendant(count("cyclepend")?)),
            "corona" => Ok(FamilySpec::CoronaK1(Box::new(FamilySpec::parse(rest)?))),
            "join" => {
                let (left, right) = rest.split_once('+').ok_or_else(|| {
                    FamilyError::Malformed("join expects join:<spec>+<spec>".into())
                })?;
                Ok(FamilySpec::Join(
                    Box::new(FamilySpec::parse(left)?),
                    Box::new(FamilySpec::parse(right)?),
                ))
            }
            other => Err(FamilyError::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join_list(v: &[usize]) -> String {
            v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::GeneralizedStar(legs) => write!(f, "genstar:{}", join_list(legs)),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(parts) => write!(f, "kpartite:{}", join_list(parts)),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::CycleWithPendant(n) => write!(f, "cyclepend:{n}"),
            FamilySpec::Join(a, b) => write!(f, "join:{a}+{b}"),
            FamilySpec::CoronaK1(inner) => write!(f, "corona:{inner}"),
        }
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

/// Builds the named graph with canonical numbering:
/// - path/cycle/empty/complete: vertices 0..n in order (cycles close n-1 to 0);
/// - star: center 0, leaves 1..;
/// - genstar: center 0, legs numbered consecutively outward;
/// - kpartite: parts occupy consecutive blocks;
/// - wheel: hub 0, rim 1..=r;
/// - cyclepend: cycle 0..c, pendant c attached to 0;
/// - join: left operand first, then the right, plus all cross edges;
/// - corona: the operand first, then leaf n+i for each vertex i.
pub fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(invalid("path", "need at least one vertex"));
            }
            Ok(Graph::from_edges(*n, &path_edges(*n)).unwrap())
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle", "need at least three vertices"));
            }
            let mut edges = path_edges(*n);
            edges.push((*n - 1, 0));
            Ok(Graph::from_edges(*n, &edges).unwrap())
        }
        FamilySpec::Star(leaves) => {
            if *leaves == 0 {
                return Err(invalid("star", "need at least one leaf"));
            }
            let edges: Vec<_> = (1..=*leaves).map(|v| (0, v)).collect();
            Ok(Graph::from_edges(leaves + 1, &edges).unwrap())
        }
        FamilySpec::GeneralizedStar(legs) => {
            if legs.len() < 2 {
                return Err(invalid("genstar", "need at least two legs"));
            }
            if legs.contains(&0) {
                return Err(invalid("genstar", "leg lengths must be at least one"));
            }
            let n = 1 + legs.iter().sum::<usize>();
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        FamilySpec::Complete(n) => {
            if *n == 0 {
                return Err(invalid("complete", "need at least one vertex"));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_edges(*n, &edges).unwrap())
        }
        FamilySpec::CompleteMultipartite(parts) => {
            if parts.len() < 2 {
                return Err(invalid("kpartite", "need at least two parts"));
            }
            if parts.contains(&0) {
                return Err(invalid("kpartite", "part sizes must be at least one"));
            }
            let n = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, size));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        FamilySpec::Wheel(rim) => {
            if *rim < 3 {
                return Err(invalid("wheel", "need a rim of at least three vertices"));
            }
            let mut edges: Vec<_> = (1..=*rim).map(|v| (0, v)).collect();
            for v in 1..*rim {
                edges.push((v, v + 1));
            }
            edges.push((*rim, 1));
            Ok(Graph::from_edges(rim + 1, &edges).unwrap())
        }
        FamilySpec::Empty(n) => Ok(Graph::from_edges(*n, &[]).unwrap()),
        FamilySpec::CycleWithPendant(cycle) => {
            if *cycle < 3 {
                return Err(invalid("cyclepend", "need a cycle of at least three vertices"));
            }
            let mut edges = path_edges(*cycle);
            edges.push((*cycle - 1, 0));
            edges.push((0, *cycle));
            Ok(Graph::from_edges(cycle + 1, &edges).unwrap())
        }
        FamilySpec::Join(a, b) => Ok(join(&build(a)?, &build(b)?)),
        FamilySpec::CoronaK1(inner) => {
            let g = build(inner)?;
            if g.n() == 0 {
                return Err(invalid("corona", "operand needs at least one vertex"));
            }
            Ok(corona_k1(&g))
        }
    }
}

/// The join of two graphs: both vertex sets side by side plus every edge
/// between them.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let offset = a.n();
    let n = a.n() + b.n();
    let mut edges = a.edges();
    for (u, v) in b.edges() {
        edges.push((u + offset, v + offset));
    }
    for u in 0..a.n() {
        for v in 0..b.n() {
            edges.push((u, v + offset));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The corona with K1: every vertex of `g` gains one private leaf
/// (vertex n + i for original vertex i).
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::from_edges(2 * n, &edges).unwrap()
}

/// Decodes a Prüfer sequence over {0..n-1} of length n-2 into its
/// labeled tree.
fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Smallest-leaf-first decoding with a moving pointer; the vertex n-1
    // is never consumed before the final edge.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, &edges).unwrap()
}

/// A uniformly random labeled tree on n vertices from a random Prüfer
/// sequence; fully determined by the seed.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    if n == 1 {
        return Graph::from_edges(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(n, &seq)
}

/// Centroid(s) of a tree: one or two vertices minimizing the largest
/// component left by their removal.
fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![1usize; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    for &v in order.iter().rev() {
        if v != 0 {
            size[parent[v]] += size[v];
        }
    }
    let mut best = Vec::new();
    let mut best_weight = usize::MAX;
    for v in 0..n {
        let mut weight = n - size[v];
        for &u in g.neighbors(v) {
            if parent[u] == v {
                weight = weight.max(size[u]);
            }
        }
        match weight.cmp(&best_weight) {
            std::cmp::Ordering::Less => {
                best_weight = weight;
                best = vec![v];
            }
            std::cmp::Ordering::Equal => best.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    best
}

fn rooted_code(g: &Graph, root: usize, parent: usize) -> String {
    let mut child_codes: Vec<String> = g
        .neighbors(root)
        .iter()
        .copied()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, root))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Canonical code of a tree: the rooted shape code taken at the
/// centroid, or the lexicographically smaller of the two codes when the
/// tree has two centroids. Two trees are isomorphic iff their codes are
/// equal.
pub fn canonical_code(t: &Graph) -> String {
    assert!(t.n() >= 1, "code of the empty tree is undefined");
    centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("a tree has at least one centroid")
}

/// Highest vertex count served by [`all_trees`].
pub const ALL_TREES_CAP: usize = 12;

/// One representative per isomorphism class of trees on n vertices,
/// ordered by canonical code. Built by extending the (n-1)-vertex
/// representatives with one new leaf in every position and deduplicating
/// by canonical code; every tree arises this way because deleting a leaf
/// of any n-vertex tree leaves a tree on n-1 vertices.
pub fn all_trees(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 || n > ALL_TREES_CAP {
        return Err(FamilyError::TooLarge {
            n,
            cap: ALL_TREES_CAP,
        });
    }
    let mut reps = vec![Graph::from_edges(1, &[]).unwrap()];
    for size in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for tree in &reps {
            for attach in 0..size - 1 {
                let mut edges = tree.edges();
                edges.push((attach, size - 1));
                let candidate = Graph::from_edges(size, &edges).unwrap();
                let code = canonical_code(&candidate);
                seen.entry(code).or_insert(candidate);
            }
        }
        reps = seen.into_values().collect();
    }
    Ok(reps)
}
