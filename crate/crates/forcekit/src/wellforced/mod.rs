//! Deciding well-forcedness: a graph is well-forced when every minimal
//! zero forcing set is minimum. Trees get the star-removal algorithm;
//! any small graph gets the definition-level oracle; structural
//! obstructions certify failure without any search.

use thiserror::Error;

use crate::families::{build, FamilySpec};
use crate::forcing::{enumerate_minimal_zfs, ForcingError};
use crate::graph::structure::components_within;
use crate::graph::{classify, find_pendent_generalized_stars, leaf_neighbors, pendent_paths, Graph, GraphClass, VertexSet};
use crate::tree::{ReductionStep, ReductionTrace, TreeError};

pub mod verify;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WellForcedError {
    #[error("a generalized star needs at least two legs; single-leg inputs are paths, use the path rule")]
    FewerThanTwoLegs,
    #[error("leg lengths must be at least one")]
    ZeroLengthLeg,
}

/// How a verdict was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TreeAlgorithm,
    Oracle,
    StructuralWitness,
    FamilyTheorem,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::TreeAlgorithm => "tree-algorithm",
            Method::Oracle => "oracle",
            Method::StructuralWitness => "structural-witness",
            Method::FamilyTheorem => "family-theorem",
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone)]
pub enum Witness {
    /// The star-removal trace of the tree algorithm.
    Reduction(ReductionTrace),
    /// Two minimal zero forcing sets of different sizes.
    SpectrumPair { small: VertexSet, large: VertexSet },
    /// A structural obstruction.
    Obstruction(Obstruction),
    None,
}

#[derive(Debug, Clone)]
pub struct WellForcedReport {
    pub verdict: bool,
    pub method: Method,
    pub z: Option<usize>,
    /// Cardinalities achieved by minimal sets; present for oracle runs.
    pub spectrum: Option<std::collections::BTreeSet<usize>>,
    pub witness: Witness,
}

/// A subgraph pattern that certifies a graph is not well-forced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// The vertices realizing the obstruction; empty for the global
    /// no-double-pendant-tree kind.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    /// A pendent path with at least four edges.
    LongPendentPath,
    /// A pendent generalized star whose legs all have length at least 2.
    AllLongLegsPgs,
    /// A tree on more than two vertices with no double pendant.
    NoDoublePendantTree,
}

impl ObstructionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObstructionKind::LongPendentPath => "long-pendent-path",
            ObstructionKind::AllLongLegsPgs => "all-long-legs-pgs",
            ObstructionKind::NoDoublePendantTree => "no-double-pendant-tree",
        }
    }
}

fn alive_leaf_neighbors(g: &Graph, alive: &VertexSet, v: usize) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| {
            alive.contains(u)
                && g.neighbors(u).iter().filter(|&&w| alive.contains(w)).count() == 1
        })
        .collect()
}

/// Decides well-forcedness of a forest by exhaustive star removals: pick
/// the smallest vertex with two or more leaf neighbors, delete it with
/// its leaves, repeat; the forest is well-forced exactly when every
/// surviving component has at most two vertices. Surviving singletons
/// (only possible as single-vertex input components) are accepted as
/// well-forced by convention and flagged in the trace.
pub fn is_well_forced_tree(t: &Graph) -> Result<(bool, ReductionTrace), TreeError> {
    if !classify(t).is_forest() {
        return Err(TreeError::NotAForest);
    }
    let n = t.n();
    let mut alive = VertexSet::full(n);
    let mut snapshots = vec![alive.clone()];
    let mut steps = Vec::new();

    loop {
        let chosen = alive
            .iter()
            .find(|&v| alive_leaf_neighbors(t, &alive, v).len() >= 2);
        let Some(center) = chosen else { break };
        let mut removed = VertexSet::new(n);
        removed.insert(center);
        for u in alive_leaf_neighbors(t, &alive, center) {
            removed.insert(u);
        }
        alive.difference_with(&removed);
        snapshots.push(alive.clone());
        steps.push(ReductionStep {
            center,
            removed,
            snapshot: snapshots.len() - 1,
        });
    }

    let final_components = components_within(t, &alive);
    let convention_singletons: Vec<usize> = final_components
        .iter()
        .filter(|c| c.card() == 1)
        .map(|c| c.iter().next().expect("nonempty"))
        .collect();
    let verdict = final_components.iter().all(|c| c.card() <= 2);
    Ok((
        verdict,
        ReductionTrace {
            steps,
            snapshots,
            final_components,
            convention_singletons,
        },
    ))
}

/// Definition-level decision for any graph small enough to enumerate:
/// well-forced iff all minimal zero forcing sets share one cardinality.
/// On a negative verdict the witness holds a smallest and a largest
/// minimal set.
pub fn is_well_forced_oracle(g: &Graph, cap: usize) -> Result<WellForcedReport, ForcingError> {
    let enumeration = enumerate_minimal_zfs(g, cap)?;
    let verdict = enumeration.spectrum.len() <= 1;
    let z = enumeration.spectrum.iter().next().copied();
    let witness = if verdict {
        Witness::None
    } else {
        let (small, large) = enumeration.extremes().expect("spectrum nonempty");
        Witness::SpectrumPair {
            small: small.clone(),
            large: large.clone(),
        }
    };
    Ok(WellForcedReport {
        verdict,
        method: Method::Oracle,
        z,
        spectrum: Some(enumeration.spectrum),
        witness,
    })
}

/// Searches for a structural pattern that certifies the graph is not
/// well-forced, cheapest first: a pendent path of length at least four, a
/// pendent generalized star with no short leg, then (for trees on more
/// than two vertices) the absence of any double pendant. Returning `None`
/// certifies nothing.
pub fn structural_witness(g: &Graph) -> Option<Obstruction> {
    for run in pendent_paths(g) {
        if run.len() >= 5 {
            return Some(Obstruction {
                kind: ObstructionKind::LongPendentPath,
                vertices: run[..5].to_vec(),
            });
        }
    }
    for pgs in find_pendent_generalized_stars(g) {
        if pgs.legs.iter().all(|leg| leg.len() >= 2) {
            let mut vertices = vec![pgs.center];
            vertices.extend(pgs.legs.iter().flatten().copied());
            return Some(Obstruction {
                kind: ObstructionKind::AllLongLegsPgs,
                vertices,
            });
        }
    }
    if classify(g).class == GraphClass::Tree
        && g.n() > 2
        && g.vertices().all(|v| leaf_neighbors(g, v).card() < 2)
    {
        return Some(Obstruction {
            kind: ObstructionKind::NoDoublePendantTree,
            vertices: Vec::new(),
        });
    }
    None
}

/// The generalized-star rule: well-forced iff the multiset of leg lengths
/// contains at least two ones and nothing above three.
pub fn genstar_well_forced(leg_lengths: &[usize]) -> Result<bool, WellForcedError> {
    if leg_lengths.len() < 2 {
        return Err(WellForcedError::FewerThanTwoLegs);
    }
    if leg_lengths.contains(&0) {
        return Err(WellForcedError::ZeroLengthLeg);
    }
    let ones = leg_lengths.iter().filter(|&&l| l == 1).count();
    let max = *leg_lengths.iter().max().expect("nonempty");
    Ok(ones >= 2 && max <= 3)
}

/// Theorem-backed verdict for the graph families that have one: paths
/// (well-forced iff n <= 3), the generalized-star rule, the families
/// known to be well-forced (cycles, stars, wheels, complete and complete
/// multipartite graphs, empty graphs, cycles with a pendant), and coronas
/// of connected graphs on at least two vertices (never well-forced).
pub fn family_theorem_verdict(spec: &FamilySpec) -> Option<bool> {
    match spec {
        FamilySpec::Path(n) => Some(*n <= 3),
        FamilySpec::Cycle(_)
        | FamilySpec::Star(_)
        | FamilySpec::Complete(_)
        | FamilySpec::Wheel(_)
        | FamilySpec::Empty(_)
        | FamilySpec::CycleWithPendant(_)
        | FamilySpec::CompleteMultipartite(_) => Some(true),
        FamilySpec::GeneralizedStar(legs) => genstar_well_forced(legs).ok(),
        FamilySpec::CoronaK1(inner) => {
            let g = build(inner).ok()?;
            (g.n() >= 2 && classify(&g).components.len() == 1).then_some(false)
        }
        FamilySpec::Join(_, _) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::figure_tree;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn paths_well_forced_up_to_three() {
        for n in 1..=8 {
            let (verdict, _) = is_well_forced_tree(&path(n)).unwrap();
            assert_eq!(verdict, n <= 3, "P_{n}");
        }
    }

    #[test]
    fn p3_reduction_empties_the_tree() {
        let (verdict, trace) = is_well_forced_tree(&path(3)).unwrap();
        assert!(verdict);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].center, 1);
        assert!(trace.final_alive().is_empty());
        assert!(trace.convention_singletons.is_empty());
    }

    #[test]
    fn p5_survives_untouched() {
        let (verdict, trace) = is_well_forced_tree(&path(5)).unwrap();
        assert!(!verdict);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.final_components.len(), 1);
        assert_eq!(trace.final_components[0].card(), 5);
    }

    #[test]
    fn singleton_input_accepted_by_convention() {
        let (verdict, trace) = is_well_forced_tree(&path(1)).unwrap();
        assert!(verdict);
        assert_eq!(trace.convention_singletons, vec![0]);
    }

    #[test]
    fn figure_tree_reduces_to_one_k2() {
        let g = figure_tree();
        let (verdict, trace) = is_well_forced_tree(&g).unwrap();
        assert!(verdict);
        assert_eq!(trace.final_components.len(), 1);
        assert_eq!(trace.final_components[0].to_vec(), vec![17, 18]);
        assert!(trace.convention_singletons.is_empty());
    }

    #[test]
    fn spider_one_two_two_is_not_well_forced() {
        // Center 0; leg 1; legs 2-3 and 4-5.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let (verdict, _) = is_well_forced_tree(&g).unwrap();
        assert!(!verdict);
    }

    #[test]
    fn tree_algorithm_rejects_cycles() {
        assert_eq!(is_well_forced_tree(&cycle(4)), Err(TreeError::NotAForest));
    }

    #[test]
    fn oracle_on_c5_p4_k23() {
        let r = is_well_forced_oracle(&cycle(5), 20).unwrap();
        assert!(r.verdict);
        assert_eq!(r.z, Some(2));

        let r = is_well_forced_oracle(&path(4), 20).unwrap();
        assert!(!r.verdict);
        assert_eq!(
            r.spectrum.as_ref().unwrap().iter().copied().collect::<Vec<_>>(),
            vec![1, 2]
        );
        match &r.witness {
            Witness::SpectrumPair { small, large } => {
                assert_eq!(small.to_vec(), vec![0]);
                assert_eq!(large.to_vec(), vec![1, 2]);
            }
            other => panic!("expected a spectrum pair, got {other:?}"),
        }

        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_well_forced_oracle(&k23, 20).unwrap().verdict);
    }

    #[test]
    fn structural_witness_examples() {
        let w = structural_witness(&path(5)).unwrap();
        assert_eq!(w.kind, ObstructionKind::LongPendentPath);
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);

        // Two adjacent centers with two length-2 legs each.
        let g = Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)],
        )
        .unwrap();
        let w = structural_witness(&g).unwrap();
        assert_eq!(w.kind, ObstructionKind::AllLongLegsPgs);
        assert!(w.vertices.contains(&0));

        assert_eq!(structural_witness(&cycle(6)), None);

        let w = structural_witness(&path(4)).unwrap();
        assert_eq!(w.kind, ObstructionKind::NoDoublePendantTree);
    }

    #[test]
    fn genstar_rule() {
        assert_eq!(genstar_well_forced(&[1, 1, 2]), Ok(true));
        assert_eq!(genstar_well_forced(&[1, 2, 2]), Ok(false));
        assert_eq!(genstar_well_forced(&[1, 1, 4]), Ok(false));
        assert_eq!(genstar_well_forced(&[1, 1, 3]), Ok(true));
        assert_eq!(genstar_well_forced(&[1, 1]), Ok(true));
        assert_eq!(genstar_well_forced(&[2]), Err(WellForcedError::FewerThanTwoLegs));
        assert_eq!(genstar_well_forced(&[1, 0]), Err(WellForcedError::ZeroLengthLeg));
    }

    #[test]
    fn family_rules() {
        assert_eq!(family_theorem_verdict(&FamilySpec::Path(3)), Some(true));
        assert_eq!(family_theorem_verdict(&FamilySpec::Path(4)), Some(false));
        assert_eq!(family_theorem_verdict(&FamilySpec::Cycle(6)), Some(true));
        assert_eq!(
            family_theorem_verdict(&FamilySpec::GeneralizedStar(vec![1, 2, 2])),
            Some(false)
        );
        assert_eq!(
            family_theorem_verdict(&FamilySpec::CoronaK1(Box::new(FamilySpec::Path(3)))),
            Some(false)
        );
        assert_eq!(
            family_theorem_verdict(&FamilySpec::CoronaK1(Box::new(FamilySpec::Path(1)))),
            None
        );
    }
}
