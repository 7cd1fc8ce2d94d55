//! Structural queries: component/shape classification, leaf neighborhoods,
//! maximal pendent paths, and pendent generalized stars.

use super::{Graph, VertexSet};

/// Shape of a graph: a tree (connected, acyclic), a forest that is not a
/// single tree, or a graph containing a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Forest,
    HasCycle,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub class: GraphClass,
    /// Connected components, ordered by smallest member.
    pub components: Vec<VertexSet>,
}

impl Classification {
    pub fn is_forest(&self) -> bool {
        self.class != GraphClass::HasCycle
    }
}

/// Connected components, each as a vertex set, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Classifies the graph and returns its component partition. A graph is a
/// tree iff it is connected with exactly n-1 edges; a forest iff every
/// component is a tree.
pub fn classify(g: &Graph) -> Classification {
    let comps = components(g);
    let acyclic = g.edge_count() + comps.len() == g.n();
    let class = if acyclic && comps.len() == 1 {
        GraphClass::Tree
    } else if acyclic {
        GraphClass::Forest
    } else {
        GraphClass::HasCycle
    };
    Classification {
        class,
        components: comps,
    }
}

/// L(v): the neighbors of `v` that have degree one.
pub fn leaf_neighbors(g: &Graph, v: usize) -> VertexSet {
    assert!(v < g.n(), "vertex {v} out of range");
    VertexSet::with_members(
        g.n(),
        g.neighbors(v).iter().copied().filter(|&u| g.degree(u) == 1),
    )
}

/// L[v] = L(v) together with v itself.
pub fn closed_leaf_neighbors(g: &Graph, v: usize) -> VertexSet {
    let mut s = leaf_neighbors(g, v);
    s.insert(v);
    s
}

/// Maximal pendent paths: each sequence starts at a degree-1 vertex and
/// walks inward through degree-2 vertices, ending at (and including) the
/// first vertex of other degree, or at the far leaf of a path component.
/// A path component is reported once, oriented from its smaller leaf.
pub fn pendent_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for leaf in g.vertices().filter(|&v| g.degree(v) == 1) {
        let mut seq = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        loop {
            seq.push(cur);
            if g.degree(cur) != 2 {
                break;
            }
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&u| u != prev)
                .expect("degree-2 vertex has a second neighbor");
            prev = cur;
            cur = next;
        }
        // Whole-path components show up from both leaves; keep the lower.
        let last = *seq.last().unwrap();
        if g.degree(last) == 1 && last < leaf {
            continue;
        }
        out.push(seq);
    }
    out
}

/// A pendent generalized star: a high-degree center whose deletion leaves
/// exactly one non-path component (reached through the single anchor edge)
/// plus `legs.len()` pendent-path components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendentGeneralizedStar {
    pub center: usize,
    /// Each leg runs from the neighbor of the center out to the leaf.
    pub legs: Vec<Vec<usize>>,
    /// The unique edge from the center into the rest of the graph.
    pub anchor: (usize, usize),
}

impl PendentGeneralizedStar {
    /// Leg lengths in edges, counting the edge from the center.
    pub fn leg_lengths(&self) -> Vec<usize> {
        self.legs.iter().map(Vec::len).collect()
    }

    /// All vertices of the star: the center plus every leg vertex.
    pub fn vertices(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::with_members(n, self.legs.iter().flatten().copied());
        s.insert(self.center);
        s
    }
}

/// Checks whether component `comp` of `g - center` is a pendent path of
/// `g`, returning it ordered from the leaf inward if so.
fn as_leg(g: &Graph, comp: &VertexSet) -> Option<Vec<usize>> {
    let members = comp.to_vec();
    if members.len() == 1 {
        let u = members[0];
        return (g.degree(u) == 1).then(|| vec![u]);
    }
    let mut leaf = None;
    for &u in &members {
        match g.degree(u) {
            1 if leaf.is_none() => leaf = Some(u),
            2 => {}
            _ => return None,
        }
    }
    let leaf = leaf?;
    // Degrees force a path: walk it from the outer leaf.
    let mut seq = vec![leaf];
    let mut prev = leaf;
    let mut cur = g.neighbors(leaf)[0];
    while comp.contains(cur) {
        seq.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&u| u != prev);
        match next {
            Some(next) if comp.contains(next) => {
                prev = cur;
                cur = next;
            }
            _ => break,
        }
    }
    (seq.len() == members.len()).then_some(seq)
}

/// Finds every pendent generalized star of the graph, ordered by center.
/// Paths and pure generalized stars yield none: their unique high-degree
/// vertex (if any) fails the legs-plus-one-component condition.
pub fn find_pendent_generalized_stars(g: &Graph) -> Vec<PendentGeneralizedStar> {
    let n = g.n();
    let mut out = Vec::new();
    for center in g.vertices().filter(|&v| g.degree(v) >= 3) {
        let mut keep = VertexSet::full(n);
        keep.remove(center);
        let comps = components_within(g, &keep);
        let mut legs = Vec::new();
        let mut rest = Vec::new();
        for comp in &comps {
            match as_leg(g, comp) {
                Some(leg) => legs.push(leg),
                None => rest.push(comp),
            }
        }
        if legs.len() + 1 != comps.len() || legs.len() < 2 {
            continue;
        }
        // Exactly one non-leg component; the center must reach it by a
        // single anchor edge.
        let rest = rest[0];
        let anchors: Vec<usize> = g
            .neighbors(center)
            .iter()
            .copied()
            .filter(|&u| rest.contains(u))
            .collect();
        if anchors.len() != 1 {
            continue;
        }
        let mut legs: Vec<Vec<usize>> = legs
            .into_iter()
            .map(|leg| leg.into_iter().rev().collect()) // center-neighbor first
            .collect();
        legs.sort();
        out.push(PendentGeneralizedStar {
            center,
            legs,
            anchor: (center, anchors[0]),
        });
    }
    out
}

/// Components of the subgraph induced by `keep`, in original identifiers.
pub fn components_within(g: &Graph, keep: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in keep.iter() {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &u in g.neighbors(v) {
                if keep.contains(u) && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}
