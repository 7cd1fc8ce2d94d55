//! Per-graph verification battery: each check evaluates one structural
//! statement literally against the enumeration oracle and reports a
//! counterexample certificate on failure. Checks whose hypothesis does
//! not apply to the given graph report a vacuous pass; checks whose
//! oracle would exceed the cap report that instead of guessing.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use thiserror::Error;

use crate::families::corona_k1;
use crate::forcing::{
    closure_with_policy, enumerate_minimal_zfs, zfs_mask_table, ForcePolicy, ForcingError,
    MinimalZfsEnumeration,
};
use crate::graph::structure::components_within;
use crate::graph::{classify, find_pendent_generalized_stars, leaf_neighbors, Graph, GraphClass, VertexSet};
use crate::tree::{b_decomposition, irrelevant_vertices, IrrelevantMode};

use super::{is_well_forced_oracle, is_well_forced_tree};

/// The stable names of every check, in the order they are reported.
pub const CHECK_NAMES: [&str; 15] = [
    "obs-legs",
    "lem-legs-in-pgs",
    "lem-center",
    "cor-center",
    "lem-tprime",
    "thm-no-double-pendants",
    "thm-star-removal",
    "cor-irrelevance-preserved",
    "prop-star-removal-wf",
    "prop-corona",
    "prop-cycle-pendant",
    "cor-b-irrelevant",
    "lem-pseudoleaf-forcing",
    "thm-irrelevant-iff-b",
    "thm-wellforced-tree-algo",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check name: {0}")]
    UnknownCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    /// The hypothesis applied and the statement held.
    Passed,
    /// A concrete counterexample was found.
    Failed,
    /// The hypothesis does not apply to this graph.
    Vacuous,
    /// The oracle this check needs exceeds the cap.
    TooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub status: CheckStatus,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn passed() -> Self {
        CheckOutcome {
            status: CheckStatus::Passed,
            detail: None,
        }
    }
    fn failed(detail: String) -> Self {
        CheckOutcome {
            status: CheckStatus::Failed,
            detail: Some(detail),
        }
    }
    fn vacuous() -> Self {
        CheckOutcome {
            status: CheckStatus::Vacuous,
            detail: None,
        }
    }
    fn too_large() -> Self {
        CheckOutcome {
            status: CheckStatus::TooLarge,
            detail: None,
        }
    }
    pub fn is_failure(&self) -> bool {
        self.status == CheckStatus::Failed
    }
}

/// Runs the selected checks (all of them when `selection` is `None`)
/// against one graph, merging results by check name.
pub fn verify_theorems(
    g: &Graph,
    selection: Option<&[String]>,
    cap: usize,
) -> Result<BTreeMap<&'static str, CheckOutcome>, VerifyError> {
    let names: Vec<&'static str> = match selection {
        None => CHECK_NAMES.to_vec(),
        Some(requested) => {
            let mut out = Vec::new();
            for name in requested {
                let known = CHECK_NAMES
                    .iter()
                    .copied()
                    .find(|&k| k == name)
                    .ok_or_else(|| VerifyError::UnknownCheck(name.clone()))?;
                out.push(known);
            }
            out
        }
    };
    let mut report = BTreeMap::new();
    for name in names {
        report.insert(name, run_check(name, g, cap));
    }
    Ok(report)
}

/// Runs the full battery.
pub fn run_all_checks(g: &Graph, cap: usize) -> BTreeMap<&'static str, CheckOutcome> {
    verify_theorems(g, None, cap).expect("full battery has no unknown names")
}

fn run_check(name: &str, g: &Graph, cap: usize) -> CheckOutcome {
    match name {
        "obs-legs" => check_obs_legs(g, cap),
        "lem-legs-in-pgs" => check_legs_in_pgs(g, cap),
        "lem-center" => check_center_lemma(g, cap),
        "cor-center" => check_center_corollary(g, cap),
        "lem-tprime" => check_tprime(g, cap),
        "thm-no-double-pendants" => check_no_double_pendants(g, cap),
        "thm-star-removal" => check_star_removal_theorem(g, cap),
        "cor-irrelevance-preserved" => check_irrelevance_preserved(g, cap),
        "prop-star-removal-wf" => check_star_removal_preserves_wf(g, cap),
        "prop-corona" => check_corona(g, cap),
        "prop-cycle-pendant" => check_cycle_pendant(g, cap),
        "cor-b-irrelevant" => check_b_irrelevant(g, cap),
        "lem-pseudoleaf-forcing" => check_pseudoleaf_forcing(g, cap),
        "thm-irrelevant-iff-b" => check_irrelevant_iff_b(g, cap),
        "thm-wellforced-tree-algo" => check_tree_algo_agreement(g, cap),
        other => unreachable!("unknown check {other} got past name resolution"),
    }
}

fn enumerate_or_outcome(g: &Graph, cap: usize) -> Result<MinimalZfsEnumeration, CheckOutcome> {
    match enumerate_minimal_zfs(g, cap) {
        Ok(e) => Ok(e),
        Err(ForcingError::InstanceTooLarge { .. }) => Err(CheckOutcome::too_large()),
        Err(other) => Err(CheckOutcome::failed(format!("oracle error: {other}"))),
    }
}

/// The unique high-degree vertex of a generalized star with at least
/// three legs, when the graph is one.
fn genstar_center(g: &Graph) -> Option<usize> {
    if classify(g).class != GraphClass::Tree {
        return None;
    }
    let high: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    (high.len() == 1).then(|| high[0])
}

fn eligible_star_centers(g: &Graph) -> Vec<usize> {
    g.vertices()
        .filter(|&v| leaf_neighbors(g, v).card() >= 2)
        .collect()
}

/// Every minimal set of a generalized star touches exactly legs-minus-one
/// legs.
fn check_obs_legs(g: &Graph, cap: usize) -> CheckOutcome {
    let Some(center) = genstar_center(g) else {
        return CheckOutcome::vacuous();
    };
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let mut keep = VertexSet::full(g.n());
    keep.remove(center);
    let legs = components_within(g, &keep);
    let expected = legs.len() - 1;
    for s in &enumeration.sets {
        let touched = legs.iter().filter(|leg| leg.iter().any(|v| s.contains(v))).count();
        if touched != expected {
            return CheckOutcome::failed(format!(
                "minimal set {s} touches {touched} of {} legs, expected {expected}",
                legs.len()
            ));
        }
    }
    CheckOutcome::passed()
}

/// Any zero forcing set touches at least legs-minus-one legs of every
/// pendent generalized star.
fn check_legs_in_pgs(g: &Graph, cap: usize) -> CheckOutcome {
    let stars = find_pendent_generalized_stars(g);
    if stars.is_empty() {
        return CheckOutcome::vacuous();
    }
    let table = match zfs_mask_table(g, cap) {
        Ok(t) => t,
        Err(_) => return CheckOutcome::too_large(),
    };
    let n = g.n();
    for mask in 0..(1u64 << n) {
        if table[mask as usize / 64] >> (mask % 64) & 1 == 0 {
            continue;
        }
        for pgs in &stars {
            let touched = pgs
                .legs
                .iter()
                .filter(|leg| leg.iter().any(|&v| mask >> v & 1 == 1))
                .count();
            if touched + 1 < pgs.legs.len() {
                return CheckOutcome::failed(format!(
                    "zero forcing set {} touches only {touched} of {} legs at center {}",
                    VertexSet::from_low_mask(n, mask),
                    pgs.legs.len(),
                    pgs.center
                ));
            }
        }
    }
    CheckOutcome::passed()
}

/// When the center of a pendent generalized star lies in a minimal set,
/// the rest of the star's contribution is legs-minus-one or legs
/// degree-two neighbors of the center.
fn check_center_lemma(g: &Graph, cap: usize) -> CheckOutcome {
    let stars = find_pendent_generalized_stars(g);
    if stars.is_empty() {
        return CheckOutcome::vacuous();
    }
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    for pgs in &stars {
        let star_vertices = pgs.vertices(g.n());
        let leg_count = pgs.legs.len();
        let allowed: HashSet<usize> = pgs
            .legs
            .iter()
            .map(|leg| leg[0])
            .filter(|&u| g.degree(u) == 2)
            .collect();
        for s in &enumeration.sets {
            if !s.contains(pgs.center) {
                continue;
            }
            let mut on_star = s.clone();
            on_star.intersect_with(&star_vertices);
            on_star.remove(pgs.center);
            let members: Vec<usize> = on_star.to_vec();
            let size_ok = members.len() == leg_count - 1 || members.len() == leg_count;
            let all_allowed = members.iter().all(|v| allowed.contains(v));
            if !size_ok || !all_allowed {
                return CheckOutcome::failed(format!(
                    "minimal set {s} meets the star at center {} in {members:?}",
                    pgs.center
                ));
            }
        }
    }
    CheckOutcome::passed()
}

/// No minimum zero forcing set contains the center of a pendent
/// generalized star.
fn check_center_corollary(g: &Graph, cap: usize) -> CheckOutcome {
    let stars = find_pendent_generalized_stars(g);
    if stars.is_empty() {
        return CheckOutcome::vacuous();
    }
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let z = *enumeration.spectrum.iter().next().expect("nonempty");
    for s in enumeration.sets.iter().filter(|s| s.card() == z) {
        for pgs in &stars {
            if s.contains(pgs.center) {
                return CheckOutcome::failed(format!(
                    "minimum set {s} contains pendent-star center {}",
                    pgs.center
                ));
            }
        }
    }
    CheckOutcome::passed()
}

/// Dropping all legs of a pendent generalized star except a shortest one
/// lifts every minimal set of the subtree to one of the whole tree that
/// agrees on the subtree.
fn check_tprime(g: &Graph, cap: usize) -> CheckOutcome {
    if classify(g).class != GraphClass::Tree {
        return CheckOutcome::vacuous();
    }
    let stars: Vec<_> = find_pendent_generalized_stars(g)
        .into_iter()
        .filter(|pgs| pgs.legs.iter().filter(|leg| leg.len() == 1).count() <= 1)
        .collect();
    if stars.is_empty() {
        return CheckOutcome::vacuous();
    }
    let whole = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    for pgs in &stars {
        let shortest = pgs
            .legs
            .iter()
            .enumerate()
            .min_by_key(|(_, leg)| (leg.len(), leg[0]))
            .map(|(i, _)| i)
            .expect("at least two legs");
        let mut keep = VertexSet::full(g.n());
        for (i, leg) in pgs.legs.iter().enumerate() {
            if i != shortest {
                for &v in leg {
                    keep.remove(v);
                }
            }
        }
        let sub = g.induced(&keep);
        let sub_enum = match enumerate_or_outcome(&sub.graph, cap) {
            Ok(e) => e,
            Err(out) => return out,
        };
        let whole_sets: Vec<&VertexSet> = whole.sets.iter().collect();
        for s_prime in &sub_enum.sets {
            let lifted = sub.to_original_set(s_prime, g.n());
            let found = whole_sets.iter().any(|s| {
                let mut restricted = (*s).clone();
                restricted.intersect_with(&keep);
                restricted == lifted
            });
            if !found {
                return CheckOutcome::failed(format!(
                    "no minimal set of the tree restricts to {lifted} on the subtree at center {}",
                    pgs.center
                ));
            }
        }
    }
    CheckOutcome::passed()
}

/// In a tree with no double pendants, every vertex is in some minimal
/// set.
fn check_no_double_pendants(g: &Graph, cap: usize) -> CheckOutcome {
    if classify(g).class != GraphClass::Tree || !eligible_star_centers(g).is_empty() {
        return CheckOutcome::vacuous();
    }
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let mut in_some = VertexSet::new(g.n());
    for s in &enumeration.sets {
        in_some.union_with(s);
    }
    if in_some == VertexSet::full(g.n()) {
        CheckOutcome::passed()
    } else {
        CheckOutcome::failed(format!(
            "vertices {} are in no minimal set",
            in_some.complement()
        ))
    }
}

fn sets_as_key(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

/// The two-case correspondence between minimal sets of a tree and of the
/// tree with one star removed.
fn check_star_removal_theorem(g: &Graph, cap: usize) -> CheckOutcome {
    if classify(g).class != GraphClass::Tree {
        return CheckOutcome::vacuous();
    }
    let centers = eligible_star_centers(g);
    if centers.is_empty() {
        return CheckOutcome::vacuous();
    }
    let whole = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let whole_keys: HashSet<Vec<usize>> = whole.sets.iter().map(sets_as_key).collect();

    for &v in &centers {
        let leaves = leaf_neighbors(g, v);
        let k = leaves.card();
        let mut keep = VertexSet::full(g.n());
        keep.difference_with(&leaves);
        keep.remove(v);
        let sub = g.induced(&keep);
        let sub_enum = match enumerate_or_outcome(&sub.graph, cap) {
            Ok(e) => e,
            Err(out) => return out,
        };
        let sub_sets: Vec<VertexSet> = sub_enum
            .sets
            .iter()
            .map(|s| sub.to_original_set(s, g.n()))
            .collect();
        let sub_keys: HashSet<Vec<usize>> = sub_sets.iter().map(sets_as_key).collect();
        let neighbors_in_sub: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| keep.contains(u))
            .collect();

        // Forward: every minimal set of the tree matches exactly one case.
        for s in &whole.sets {
            if s.contains(v) {
                return CheckOutcome::failed(format!(
                    "minimal set {s} contains the removed vertex {v}"
                ));
            }
            let mut on_leaves = s.clone();
            on_leaves.intersect_with(&leaves);
            let mut restricted = s.clone();
            restricted.intersect_with(&keep);
            let case = if on_leaves.card() == k - 1 {
                sub_keys.contains(&sets_as_key(&restricted))
            } else if on_leaves.card() == k {
                neighbors_in_sub.iter().any(|&u| {
                    if s.contains(u) {
                        return false;
                    }
                    let mut candidate = restricted.clone();
                    candidate.insert(u);
                    sub_keys.contains(&sets_as_key(&candidate))
                })
            } else {
                false
            };
            if !case {
                return CheckOutcome::failed(format!(
                    "minimal set {s} fits neither case at vertex {v}"
                ));
            }
        }

        // Reverse: both constructions produce minimal sets of the tree.
        for s_prime in &sub_sets {
            for dropped in leaves.iter() {
                let mut built = s_prime.clone();
                built.union_with(&leaves);
                built.remove(dropped);
                if !whole_keys.contains(&sets_as_key(&built)) {
                    return CheckOutcome::failed(format!(
                        "case-1 construction {built} is not minimal in the tree (vertex {v})"
                    ));
                }
            }
            for &u in &neighbors_in_sub {
                if !s_prime.contains(u) {
                    continue;
                }
                let mut built = s_prime.clone();
                built.remove(u);
                built.union_with(&leaves);
                if !whole_keys.contains(&sets_as_key(&built)) {
                    return CheckOutcome::failed(format!(
                        "case-2 construction {built} is not minimal in the tree (vertex {v})"
                    ));
                }
            }
        }
    }
    CheckOutcome::passed()
}

/// Star removal preserves which surviving vertices are irrelevant.
fn check_irrelevance_preserved(g: &Graph, cap: usize) -> CheckOutcome {
    if classify(g).class != GraphClass::Tree {
        return CheckOutcome::vacuous();
    }
    let centers = eligible_star_centers(g);
    if centers.is_empty() {
        return CheckOutcome::vacuous();
    }
    let whole_irr = match irrelevant_vertices(g, IrrelevantMode::Oracle { cap }) {
        Ok(s) => s,
        Err(_) => return CheckOutcome::too_large(),
    };
    for &v in &centers {
        let leaves = leaf_neighbors(g, v);
        let mut keep = VertexSet::full(g.n());
        keep.difference_with(&leaves);
        keep.remove(v);
        let sub = g.induced(&keep);
        let sub_irr = match irrelevant_vertices(&sub.graph, IrrelevantMode::Oracle { cap }) {
            Ok(s) => s,
            Err(_) => return CheckOutcome::too_large(),
        };
        let sub_irr_orig = sub.to_original_set(&sub_irr, g.n());
        let mut whole_on_sub = whole_irr.clone();
        whole_on_sub.intersect_with(&keep);
        if whole_on_sub != sub_irr_orig {
            return CheckOutcome::failed(format!(
                "at vertex {v}: irrelevant {whole_on_sub} in the tree vs {sub_irr_orig} after removal"
            ));
        }
    }
    CheckOutcome::passed()
}

/// A tree is well-forced iff every component left by any one star removal
/// is well-forced; in particular the verdict is independent of the
/// removal choice.
fn check_star_removal_preserves_wf(g: &Graph, cap: usize) -> CheckOutcome {
    if classify(g).class != GraphClass::Tree {
        return CheckOutcome::vacuous();
    }
    let centers = eligible_star_centers(g);
    if centers.is_empty() {
        return CheckOutcome::vacuous();
    }
    let whole = match is_well_forced_oracle(g, cap) {
        Ok(r) => r.verdict,
        Err(_) => return CheckOutcome::too_large(),
    };
    for &v in &centers {
        let leaves = leaf_neighbors(g, v);
        let mut keep = VertexSet::full(g.n());
        keep.difference_with(&leaves);
        keep.remove(v);
        let mut all_components_wf = true;
        for comp in components_within(g, &keep) {
            let sub = g.induced(&comp);
            match is_well_forced_oracle(&sub.graph, cap) {
                Ok(r) => all_components_wf &= r.verdict,
                Err(_) => return CheckOutcome::too_large(),
            }
        }
        if whole != all_components_wf {
            return CheckOutcome::failed(format!(
                "removal at {v}: tree verdict {whole} but components give {all_components_wf}"
            ));
        }
    }
    CheckOutcome::passed()
}

/// The corona of a connected graph on at least two vertices is never
/// well-forced.
fn check_corona(g: &Graph, cap: usize) -> CheckOutcome {
    if g.n() < 2 || classify(g).components.len() != 1 {
        return CheckOutcome::vacuous();
    }
    let corona = corona_k1(g);
    match is_well_forced_oracle(&corona, cap) {
        Ok(r) if !r.verdict => CheckOutcome::passed(),
        Ok(_) => CheckOutcome::failed(format!(
            "corona of a connected graph on {} vertices came back well-forced",
            g.n()
        )),
        Err(_) => CheckOutcome::too_large(),
    }
}

/// A cycle with a single additional pendant is well-forced.
fn check_cycle_pendant(g: &Graph, cap: usize) -> CheckOutcome {
    let n = g.n();
    let pendant = g.vertices().find(|&v| g.degree(v) == 1);
    let attach = g.vertices().find(|&v| g.degree(v) == 3);
    let is_shape = n >= 4
        && g.edge_count() == n
        && classify(g).components.len() == 1
        && g.vertices().filter(|&v| g.degree(v) == 1).count() == 1
        && g.vertices().filter(|&v| g.degree(v) == 3).count() == 1
        && g.vertices().filter(|&v| g.degree(v) == 2).count() == n - 2
        // The pendant hangs directly off the cycle; a longer tail is a
        // tadpole, not this shape.
        && matches!((pendant, attach), (Some(p), Some(a)) if g.has_edge(p, a));
    if !is_shape {
        return CheckOutcome::vacuous();
    }
    match is_well_forced_oracle(g, cap) {
        Ok(r) if r.verdict => CheckOutcome::passed(),
        Ok(_) => CheckOutcome::failed("cycle-with-pendant came back not well-forced".into()),
        Err(_) => CheckOutcome::too_large(),
    }
}

/// No B-vertex appears in any minimal zero forcing set (any graph).
fn check_b_irrelevant(g: &Graph, cap: usize) -> CheckOutcome {
    let decomposition = b_decomposition(g);
    let b = decomposition.b_vertices();
    if b.is_empty() {
        return CheckOutcome::vacuous();
    }
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    for s in &enumeration.sets {
        for v in b.iter() {
            if s.contains(v) {
                return CheckOutcome::failed(format!(
                    "B-vertex {v} appears in minimal set {s}"
                ));
            }
        }
    }
    CheckOutcome::passed()
}

/// Under every minimal set there is a realization in which each B-vertex
/// is forced by one of its pseudoleaves; built constructively by re-running
/// the closure with the pseudoleaf-priority tie-break.
fn check_pseudoleaf_forcing(g: &Graph, cap: usize) -> CheckOutcome {
    let decomposition = b_decomposition(g);
    let b = decomposition.b_vertices();
    if b.is_empty() {
        return CheckOutcome::vacuous();
    }
    let enumeration = match enumerate_or_outcome(g, cap) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let owner = decomposition.pseudoleaf_owner();
    let policy = ForcePolicy::PseudoleafPriority {
        owner: owner.clone(),
        b_vertices: b.clone(),
    };
    for s in &enumeration.sets {
        let (_, realization) = closure_with_policy(g, s, &policy);
        let mut forced_by: BTreeMap<usize, usize> = BTreeMap::new();
        for &(f, t) in &realization.forces {
            forced_by.insert(t, f);
        }
        for v in b.iter() {
            if s.contains(v) {
                return CheckOutcome::failed(format!("B-vertex {v} sits in minimal set {s}"));
            }
            match forced_by.get(&v) {
                Some(&f) if owner.get(&f) == Some(&v) => {}
                Some(&f) => {
                    return CheckOutcome::failed(format!(
                        "B-vertex {v} forced by {f}, not one of its pseudoleaves, under {s}"
                    ))
                }
                None => {
                    return CheckOutcome::failed(format!(
                        "B-vertex {v} never forced under minimal set {s}"
                    ))
                }
            }
        }
    }
    CheckOutcome::passed()
}

/// On forests the fast route (B-vertices) and the oracle route agree on
/// the irrelevant set.
fn check_irrelevant_iff_b(g: &Graph, cap: usize) -> CheckOutcome {
    if !classify(g).is_forest() {
        return CheckOutcome::vacuous();
    }
    let fast = irrelevant_vertices(g, IrrelevantMode::TreeFast).expect("forest");
    match irrelevant_vertices(g, IrrelevantMode::Oracle { cap }) {
        Ok(oracle) if oracle == fast => CheckOutcome::passed(),
        Ok(oracle) => CheckOutcome::failed(format!(
            "B-vertices {fast} but oracle-irrelevant {oracle}"
        )),
        Err(_) => CheckOutcome::too_large(),
    }
}

/// On forests the star-removal algorithm and the oracle agree on the
/// well-forced verdict.
fn check_tree_algo_agreement(g: &Graph, cap: usize) -> CheckOutcome {
    if !classify(g).is_forest() {
        return CheckOutcome::vacuous();
    }
    let (algo, _) = is_well_forced_tree(g).expect("forest");
    match is_well_forced_oracle(g, cap) {
        Ok(r) if r.verdict == algo => CheckOutcome::passed(),
        Ok(r) => CheckOutcome::failed(format!(
            "tree algorithm says {algo}, oracle says {}",
            r.verdict
        )),
        Err(_) => CheckOutcome::too_large(),
    }
}

/// Seeded random connected graph on n vertices: a G(m, p) core with p
/// drawn from a range that keeps sparse shapes frequent, conditioned on
/// connectivity, plus up to three grafted leaves. The grafting keeps
/// pendants (and double pendants, hence B-vertices) well represented in
/// random scopes; every connected graph stays in the support via the
/// zero-leaf case.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edges(1, &[]).expect("trivial");
    }
    let leaves = rng.gen_range(0..=3.min(n - 1));
    let core = n - leaves;
    let p = rng.gen_range(0.2..0.6);
    let mut edges;
    loop {
        edges = Vec::new();
        for u in 0..core {
            for v in u + 1..core {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(core, &edges).expect("generated edges are simple");
        if classify(&g).components.len() == 1 {
            break;
        }
    }
    for i in 0..leaves {
        edges.push((rng.gen_range(0..core), core + i));
    }
    Graph::from_edges(n, &edges).expect("leaf grafts are fresh vertices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn genstar(legs: &[usize]) -> Graph {
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
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn obs_legs_on_genstar_2_2_3() {
        let outcome = check_obs_legs(&genstar(&[2, 2, 3]), 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
    }

    #[test]
    fn star_removal_theorem_on_small_trees() {
        // The claw and a double-pendant caterpillar both have eligible
        // vertices.
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(check_star_removal_theorem(&claw, 20).status, CheckStatus::Passed);
        let caterpillar =
            Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (2, 6)]).unwrap();
        let outcome = check_star_removal_theorem(&caterpillar, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
    }

    #[test]
    fn center_corollary_on_double_center_tree() {
        let g = Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)],
        )
        .unwrap();
        let outcome = check_center_corollary(&g, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
        let outcome = check_center_lemma(&g, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
        let outcome = check_legs_in_pgs(&g, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
        let outcome = check_tprime(&g, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
    }

    #[test]
    fn pseudoleaf_forcing_on_claw_and_caterpillar() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(check_pseudoleaf_forcing(&claw, 20).status, CheckStatus::Passed);
        let caterpillar =
            Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (2, 6)]).unwrap();
        let outcome = check_pseudoleaf_forcing(&caterpillar, 20);
        assert_eq!(outcome.status, CheckStatus::Passed, "{:?}", outcome.detail);
    }

    #[test]
    fn vacuous_checks_on_cycles() {
        let cycle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let report = run_all_checks(&cycle, 20);
        assert_eq!(report["obs-legs"].status, CheckStatus::Vacuous);
        assert_eq!(report["thm-star-removal"].status, CheckStatus::Vacuous);
        assert_eq!(report["thm-wellforced-tree-algo"].status, CheckStatus::Vacuous);
        // Connected graph on >= 2 vertices: the corona check applies.
        assert_eq!(report["prop-corona"].status, CheckStatus::Passed);
        assert!(!report.values().any(|o| o.is_failure()));
    }

    #[test]
    fn cycle_pendant_detection() {
        let tadpole = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(check_cycle_pendant(&tadpole, 20).status, CheckStatus::Passed);
        assert_eq!(check_cycle_pendant(&path(4), 20).status, CheckStatus::Vacuous);
    }

    #[test]
    fn battery_passes_on_small_fixture_trees() {
        for g in [path(6), genstar(&[1, 1, 2]), genstar(&[2, 2, 2])] {
            let report = run_all_checks(&g, 20);
            let failures: Vec<_> = report
                .iter()
                .filter(|(_, o)| o.is_failure())
                .map(|(name, o)| format!("{name}: {:?}", o.detail))
                .collect();
            assert!(failures.is_empty(), "{failures:?}");
        }
    }

    #[test]
    fn battery_passes_on_random_connected_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let g = random_connected_graph(7, &mut rng);
            let report = run_all_checks(&g, 20);
            let failures: Vec<_> = report
                .iter()
                .filter(|(_, o)| o.is_failure())
                .map(|(name, o)| format!("{name}: {:?} on {g:?}", o.detail))
                .collect();
            assert!(failures.is_empty(), "{failures:?}");
        }
    }

    #[test]
    fn unknown_check_names_error() {
        let g = path(3);
        assert_eq!(
            verify_theorems(&g, Some(&["no-such-check".to_string()]), 20),
            Err(VerifyError::UnknownCheck("no-such-check".into()))
        );
        let picked = verify_theorems(&g, Some(&["obs-legs".to_string()]), 20).unwrap();
        assert_eq!(picked.len(), 1);
    }

    #[test]
    fn too_large_is_reported_not_guessed() {
        let big = path(22);
        let report = run_all_checks(&big, 20);
        assert_eq!(report["thm-irrelevant-iff-b"].status, CheckStatus::TooLarge);
    }
}
