//! The color-change closure and zero forcing predicates.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor
//! blue; a zero forcing set is a seed whose closure colors the whole
//! graph. Closures are order-independent in the final blue set, so the
//! engine records one deterministic realization (ordered forces plus the
//! maximal forcing chains they induce).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

mod search;

pub use search::{enumerate_minimal_zfs, zero_forcing_number, zfn_brute_force, MinimalZfsEnumeration, ZfnResult};
pub(crate) use search::zfs_mask_table;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("instance too large: n = {n} exceeds the configured cap {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("invalid realization: chains do not cover every vertex")]
    InvalidRealization,
    #[error("invalid path cover: {0}")]
    InvalidCover(String),
    #[error("invalid choice for path {path}: {reason}")]
    InvalidChoice { path: usize, reason: String },
}

/// Caps on the exponential searches. Instances beyond a cap fail loudly
/// with [`ForcingError::InstanceTooLarge`] rather than approximating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cap for subset-search computation of the zero forcing number on
    /// graphs that are not forests.
    pub zfn_cap: usize,
    /// Cap for full enumeration of minimal zero forcing sets.
    pub enumeration_cap: usize,
}

pub const DEFAULT_SEARCH_CAP: usize = 20;

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            zfn_cap: DEFAULT_SEARCH_CAP,
            enumeration_cap: DEFAULT_SEARCH_CAP,
        }
    }
}

impl SearchLimits {
    pub fn with_cap(cap: usize) -> Self {
        SearchLimits {
            zfn_cap: cap,
            enumeration_cap: cap,
        }
    }
}

/// The blue set reached by a closure run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    pub blue: VertexSet,
}

/// One recorded closure run: the seed, the ordered list of forces, and
/// the maximal forcing chains they induce. Chains are vertex-disjoint,
/// each starts at a seed vertex, and a seed vertex that never forces is
/// a singleton chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub seed: VertexSet,
    pub forces: Vec<(usize, usize)>,
    pub chains: Vec<Vec<usize>>,
}

/// Tie-breaking rule used when several forces are legal at once.
#[derive(Debug, Clone)]
pub enum ForcePolicy {
    /// Apply the force with the smallest forcer identifier (the default).
    MinForcer,
    /// Prefer forces whose forcer is a pseudoleaf aimed at its own
    /// removal-level vertex, then forces whose target is not a B-vertex;
    /// ties by forcer identifier.
    PseudoleafPriority {
        /// pseudoleaf -> the B-vertex it was removed with
        owner: BTreeMap<usize, usize>,
        b_vertices: VertexSet,
    },
    /// Pick the ready forcer minimizing `rank[forcer]`; used to exercise
    /// order-independence with shuffled application orders.
    Ranked(Vec<usize>),
}

impl ForcePolicy {
    fn select(&self, ready: &BTreeSet<usize>, g: &Graph, blue: &VertexSet) -> usize {
        match self {
            ForcePolicy::MinForcer => *ready.first().expect("ready set nonempty"),
            ForcePolicy::Ranked(rank) => ready
                .iter()
                .copied()
                .min_by_key(|&v| rank[v])
                .expect("ready set nonempty"),
            ForcePolicy::PseudoleafPriority { owner, b_vertices } => ready
                .iter()
                .copied()
                .min_by_key(|&f| {
                    let target = white_target(g, blue, f);
                    let class = if owner.get(&f) == Some(&target) {
                        0
                    } else if !b_vertices.contains(target) {
                        1
                    } else {
                        2
                    };
                    (class, f)
                })
                .expect("ready set nonempty"),
        }
    }
}

fn white_target(g: &Graph, blue: &VertexSet, forcer: usize) -> usize {
    g.neighbors(forcer)
        .iter()
        .copied()
        .find(|&u| !blue.contains(u))
        .expect("ready forcer has a white neighbor")
}

/// Runs the closure from `seed` with the default tie-break.
pub fn closure(g: &Graph, seed: &VertexSet) -> (ColorState, Realization) {
    closure_with_policy(g, seed, &ForcePolicy::MinForcer)
}

/// Runs the closure from `seed`, resolving ties with `policy`. The final
/// blue set does not depend on the policy; the realization does.
pub fn closure_with_policy(
    g: &Graph,
    seed: &VertexSet,
    policy: &ForcePolicy,
) -> (ColorState, Realization) {
    let n = g.n();
    assert_eq!(seed.universe(), n, "seed universe must match the graph");
    let mut blue = seed.clone();
    let mut white_cnt: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| !blue.contains(u)).count())
        .collect();
    let mut ready: BTreeSet<usize> = blue.iter().filter(|&v| white_cnt[v] == 1).collect();
    let mut forces = Vec::new();

    while !ready.is_empty() {
        let forcer = policy.select(&ready, g, &blue);
        let target = white_target(g, &blue, forcer);
        blue.insert(target);
        forces.push((forcer, target));
        for &u in g.neighbors(target) {
            white_cnt[u] -= 1;
            if blue.contains(u) {
                match white_cnt[u] {
                    0 => {
                        ready.remove(&u);
                    }
                    1 => {
                        ready.insert(u);
                    }
                    _ => {}
                }
            }
        }
        if white_cnt[target] == 1 {
            ready.insert(target);
        }
    }

    let chains = build_chains(n, seed, &forces);
    (
        ColorState { blue },
        Realization {
            seed: seed.clone(),
            forces,
            chains,
        },
    )
}

fn build_chains(n: usize, seed: &VertexSet, forces: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut next = vec![None; n];
    for &(f, t) in forces {
        debug_assert!(next[f].is_none(), "a vertex forces at most once");
        next[f] = Some(t);
    }
    seed.iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(t) = next[cur] {
                chain.push(t);
                cur = t;
            }
            chain
        })
        .collect()
}

/// Whether `s` is a zero forcing set: its closure is all of V(G).
pub fn is_zfs(g: &Graph, s: &VertexSet) -> bool {
    closure(g, s).0.blue == VertexSet::full(g.n())
}

/// Whether `s` is a minimal zero forcing set: it forces, and no single
/// vertex can be removed without losing that.
pub fn is_minimal_zfs(g: &Graph, s: &VertexSet) -> bool {
    if !is_zfs(g, s) {
        return false;
    }
    for v in s.iter() {
        let mut smaller = s.clone();
        smaller.remove(v);
        if is_zfs(g, &smaller) {
            return false;
        }
    }
    true
}

/// The reversal of a realization: the last vertex of each forcing chain.
/// Defined when the chains cover the whole graph, i.e. the seed forced
/// everything; the reversal is then itself a zero forcing set of the same
/// cardinality.
pub fn reversal(g: &Graph, r: &Realization) -> Result<VertexSet, ForcingError> {
    let mut covered = VertexSet::new(g.n());
    let mut total = 0;
    for chain in &r.chains {
        total += chain.len();
        for &v in chain {
            covered.insert(v);
        }
    }
    if total != g.n() || covered != VertexSet::full(g.n()) {
        return Err(ForcingError::InvalidRealization);
    }
    Ok(VertexSet::with_members(
        g.n(),
        r.chains.iter().map(|c| *c.last().expect("chains are nonempty")),
    ))
}

/// Per-path seeding choice for [`path_cover_zfs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathChoice {
    /// Take this end vertex of the path.
    End(usize),
    /// Take this adjacent pair of internal vertices (either order).
    InternalPair(usize, usize),
}

/// Builds a zero forcing set from a path cover by taking, from each path,
/// either an end vertex or a pair of adjacent internal vertices.
pub fn path_cover_zfs(
    g: &Graph,
    cover: &[Vec<usize>],
    choices: &[PathChoice],
) -> Result<VertexSet, ForcingError> {
    let n = g.n();
    if choices.len() != cover.len() {
        return Err(ForcingError::InvalidCover(format!(
            "{} paths but {} choices",
            cover.len(),
            choices.len()
        )));
    }
    let mut covered = VertexSet::new(n);
    let mut total = 0;
    for path in cover {
        if path.is_empty() {
            return Err(ForcingError::InvalidCover("empty path".into()));
        }
        for (i, &v) in path.iter().enumerate() {
            if v >= n {
                return Err(ForcingError::InvalidCover(format!("vertex {v} out of range")));
            }
            if covered.contains(v) {
                return Err(ForcingError::InvalidCover(format!(
                    "vertex {v} appears in more than one path"
                )));
            }
            covered.insert(v);
            total += 1;
            // Consecutive vertices adjacent, non-consecutive not: the
            // sequence must be an induced path.
            for (j, &u) in path.iter().enumerate().take(i) {
                let adjacent = g.has_edge(u, v);
                if j + 1 == i && !adjacent {
                    return Err(ForcingError::InvalidCover(format!(
                        "consecutive vertices {u} and {v} are not adjacent"
                    )));
                }
                if j + 1 < i && adjacent {
                    return Err(ForcingError::InvalidCover(format!(
                        "chord {u}-{v} makes the sequence non-induced"
                    )));
                }
            }
        }
    }
    if total != n || covered != VertexSet::full(n) {
        return Err(ForcingError::InvalidCover(
            "paths do not cover every vertex".into(),
        ));
    }

    let mut out = VertexSet::new(n);
    for (idx, (path, choice)) in cover.iter().zip(choices).enumerate() {
        match *choice {
            PathChoice::End(v) => {
                if path.first() != Some(&v) && path.last() != Some(&v) {
                    return Err(ForcingError::InvalidChoice {
                        path: idx,
                        reason: format!("{v} is not an end vertex"),
                    });
                }
                out.insert(v);
            }
            PathChoice::InternalPair(u, v) => {
                let pos = path.windows(2).position(|w| {
                    (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u)
                });
                match pos {
                    // Positions 0 and len-2 would include an end vertex.
                    Some(i) if i >= 1 && i + 2 < path.len() => {
                        out.insert(u);
                        out.insert(v);
                    }
                    _ => {
                        return Err(ForcingError::InvalidChoice {
                            path: idx,
                            reason: format!(
                                "({u}, {v}) is not an adjacent internal pair of a path with {} vertices",
                                path.len()
                            ),
                        })
                    }
                }
            }
        }
    }
    Ok(out)
}
