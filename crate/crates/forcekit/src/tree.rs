//! Layered removal of double pendants (the B-vertex decomposition), star
//! reductions and removals, minimum path covers for forests, and the two
//! routes to the irrelevant-vertex set.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::forcing::{enumerate_minimal_zfs, ForcingError};
use crate::graph::{classify, leaf_neighbors, Graph, Subgraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("the graph is not a forest")]
    NotAForest,
    #[error("no vertex has a double pendant")]
    NoDoublePendant,
    #[error("vertex {vertex} has {leaf_count} leaf neighbor(s); star removal needs at least 2")]
    NotEligible { vertex: usize, leaf_count: usize },
    #[error(transparent)]
    Forcing(#[from] ForcingError),
}

/// One level of the decomposition: the vertices that have a double
/// pendant in the current residual, each mapped to its pseudoleaves (its
/// degree-one neighbors there).
#[derive(Debug, Clone)]
pub struct BLevel {
    pub vertices: VertexSet,
    pub pseudoleaves: BTreeMap<usize, VertexSet>,
}

/// The layered decomposition B_0, B_1, ... together with the residual
/// graphs G_0 = G, G_1, ..., G_m. Residual vertices keep their original
/// identifiers through the subgraph id-mappings.
#[derive(Debug, Clone)]
pub struct BDecomposition {
    pub levels: Vec<BLevel>,
    pub residuals: Vec<Subgraph>,
}

impl BDecomposition {
    /// The union of all levels: every B-vertex of the graph.
    pub fn b_vertices(&self) -> VertexSet {
        let n = self.residuals[0].graph.n();
        let mut out = VertexSet::new(n);
        for level in &self.levels {
            out.union_with(&level.vertices);
        }
        out
    }

    /// Every pseudoleaf, across all levels.
    pub fn pseudoleaves(&self) -> VertexSet {
        let n = self.residuals[0].graph.n();
        let mut out = VertexSet::new(n);
        for level in &self.levels {
            for leaves in level.pseudoleaves.values() {
                out.union_with(leaves);
            }
        }
        out
    }

    /// pseudoleaf -> the B-vertex it was removed with.
    pub fn pseudoleaf_owner(&self) -> BTreeMap<usize, usize> {
        let mut map = BTreeMap::new();
        for level in &self.levels {
            for (&b, leaves) in &level.pseudoleaves {
                for u in leaves.iter() {
                    map.insert(u, b);
                }
            }
        }
        map
    }

    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.vertices.contains(v))
    }
}

fn alive_degree(g: &Graph, alive: &VertexSet, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| alive.contains(u)).count()
}

/// Computes the full B-vertex decomposition: level i collects the
/// vertices with at least two degree-one neighbors in the residual G_i,
/// then G_{i+1} drops those vertices along with all their degree-one
/// neighbors. Defined for any graph; stops when no double pendant is
/// left.
pub fn b_decomposition(g: &Graph) -> BDecomposition {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut levels = Vec::new();
    let mut residuals = vec![Subgraph::identity(g)];

    loop {
        let mut vertices = VertexSet::new(n);
        let mut pseudoleaves = BTreeMap::new();
        for b in alive.iter() {
            let leaves: Vec<usize> = g
                .neighbors(b)
                .iter()
                .copied()
                .filter(|&u| alive.contains(u) && alive_degree(g, &alive, u) == 1)
                .collect();
            if leaves.len() >= 2 {
                vertices.insert(b);
                pseudoleaves.insert(b, VertexSet::with_members(n, leaves));
            }
        }
        if vertices.is_empty() {
            break;
        }
        alive.difference_with(&vertices);
        for leaves in pseudoleaves.values() {
            alive.difference_with(leaves);
        }
        residuals.push(g.induced(&alive));
        levels.push(BLevel {
            vertices,
            pseudoleaves,
        });
    }
    BDecomposition { levels, residuals }
}

/// One round of the reduction: deletes every vertex that has a double
/// pendant, together with all their leaf neighbors. Errors when no vertex
/// qualifies.
pub fn star_reduction(g: &Graph) -> Result<(Subgraph, VertexSet), TreeError> {
    let n = g.n();
    let mut removed = VertexSet::new(n);
    for v in g.vertices() {
        let leaves = leaf_neighbors(g, v);
        if leaves.card() >= 2 {
            removed.insert(v);
            removed.union_with(&leaves);
        }
    }
    if removed.is_empty() {
        return Err(TreeError::NoDoublePendant);
    }
    Ok((g.induced(&removed.complement()), removed))
}

/// Deletes L[v] = {v} plus every leaf neighbor of v. Requires v to have
/// at least two leaf neighbors.
pub fn star_removal(g: &Graph, v: usize) -> Result<Subgraph, TreeError> {
    let leaves = leaf_neighbors(g, v);
    if leaves.card() < 2 {
        return Err(TreeError::NotEligible {
            vertex: v,
            leaf_count: leaves.card(),
        });
    }
    let mut keep = VertexSet::full(g.n());
    keep.difference_with(&leaves);
    keep.remove(v);
    Ok(g.induced(&keep))
}

/// A minimum path cover of a forest: vertex-disjoint induced paths that
/// cover every vertex, using as few paths as possible. Works bottom-up:
/// at each vertex at most two child paths merge through it and all other
/// child paths close. The path count equals the zero forcing number of
/// the forest.
pub fn minimum_path_cover(t: &Graph) -> Result<Vec<Vec<usize>>, TreeError> {
    let cls = classify(t);
    if !cls.is_forest() {
        return Err(TreeError::NotAForest);
    }
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut open: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut paths = Vec::new();

    for comp in &cls.components {
        let root = comp.iter().next().expect("components are nonempty");
        parent[root] = root;
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in t.neighbors(v) {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    order.push(u);
                }
            }
        }

        for &v in order.iter().rev() {
            let open_children: Vec<usize> = t
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| parent[u] == v && u != v && open[u].is_some())
                .collect();
            match open_children.len() {
                0 => open[v] = Some(vec![v]),
                1 => {
                    let mut p = open[open_children[0]].take().expect("checked");
                    p.push(v);
                    open[v] = Some(p);
                }
                _ => {
                    // Merge the two smallest-id child paths through v,
                    // close the rest; v becomes internal.
                    let mut merged = open[open_children[0]].take().expect("checked");
                    merged.push(v);
                    let mut right = open[open_children[1]].take().expect("checked");
                    right.reverse();
                    merged.extend(right);
                    paths.push(merged);
                    for &c in &open_children[2..] {
                        paths.push(open[c].take().expect("checked"));
                    }
                }
            }
        }
        if let Some(p) = open[root].take() {
            paths.push(p);
        }
    }

    for p in &mut paths {
        if p.last() < p.first() {
            p.reverse();
        }
    }
    paths.sort_by_key(|p| p[0]);
    Ok(paths)
}

/// How to compute the set of vertices contained in no minimal zero
/// forcing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrrelevantMode {
    /// Forest-only fast path: the irrelevant vertices of a forest are
    /// exactly its B-vertices.
    TreeFast,
    /// Definition-level route for any graph: enumerate every minimal
    /// zero forcing set and keep the vertices missing from all of them.
    Oracle { cap: usize },
}

/// The irrelevant vertices of `g` under the chosen mode. On forests small
/// enough for the oracle, the two modes agree.
pub fn irrelevant_vertices(g: &Graph, mode: IrrelevantMode) -> Result<VertexSet, TreeError> {
    match mode {
        IrrelevantMode::TreeFast => {
            if !classify(g).is_forest() {
                return Err(TreeError::NotAForest);
            }
            Ok(b_decomposition(g).b_vertices())
        }
        IrrelevantMode::Oracle { cap } => {
            let enumeration = enumerate_minimal_zfs(g, cap)?;
            let mut in_some = VertexSet::new(g.n());
            for s in &enumeration.sets {
                in_some.union_with(s);
            }
            Ok(in_some.complement())
        }
    }
}

/// One star removal recorded by the well-forced tree algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub center: usize,
    /// L[center]: the center plus its leaf neighbors at that point.
    pub removed: VertexSet,
    /// Index into [`ReductionTrace::snapshots`] of the remaining vertex
    /// set after this step.
    pub snapshot: usize,
}

/// Full record of a star-removal run: every step, the surviving vertex
/// sets along the way, and the terminal forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// snapshots[0] is the initial vertex set; step i leaves
    /// snapshots[i + 1].
    pub snapshots: Vec<VertexSet>,
    /// Components of the terminal forest.
    pub final_components: Vec<VertexSet>,
    /// Surviving single-vertex components, accepted as well-forced by the
    /// small-component convention.
    pub convention_singletons: Vec<usize>,
}

impl ReductionTrace {
    pub fn final_alive(&self) -> &VertexSet {
        self.snapshots.last().expect("at least the initial snapshot")
    }
}
