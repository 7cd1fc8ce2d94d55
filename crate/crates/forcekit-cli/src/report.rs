//! Serializable report shapes. Field order is fixed by the struct
//! definitions and every map is a BTreeMap, so identical inputs produce
//! byte-identical JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use forcekit::tree::{BDecomposition, ReductionTrace};
use forcekit::wellforced::{Obstruction, WellForcedReport, Witness};
use forcekit::VertexSet;

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub kind: &'static str,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input: InputDescriptor,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub well_forced: Option<WellForcedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irrelevant: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_levels: Option<Vec<BLevelJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WellForcedJson {
    pub verdict: bool,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessJson {
    ReductionTrace {
        steps: Vec<ReductionStepJson>,
        final_components: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        convention_singletons: Vec<usize>,
    },
    SpectrumPair {
        small: Vec<usize>,
        large: Vec<usize>,
    },
    Obstruction {
        #[serde(flatten)]
        obstruction: ObstructionJson,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionStepJson {
    pub center: usize,
    pub removed: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BLevelJson {
    pub level: usize,
    pub vertices: Vec<usize>,
    /// B-vertex (as a decimal string key) to its pseudoleaves.
    pub pseudoleaves: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionJson {
    pub obstruction_kind: &'static str,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorObject {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

pub fn set_to_vec(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

pub fn witness_json(witness: &Witness) -> Option<WitnessJson> {
    match witness {
        Witness::Reduction(trace) => Some(trace_json(trace)),
        Witness::SpectrumPair { small, large } => Some(WitnessJson::SpectrumPair {
            small: small.to_vec(),
            large: large.to_vec(),
        }),
        Witness::Obstruction(o) => Some(WitnessJson::Obstruction {
            obstruction: obstruction_json(o),
        }),
        Witness::None => None,
    }
}

pub fn trace_json(trace: &ReductionTrace) -> WitnessJson {
    WitnessJson::ReductionTrace {
        steps: trace
            .steps
            .iter()
            .map(|s| ReductionStepJson {
                center: s.center,
                removed: s.removed.to_vec(),
            })
            .collect(),
        final_components: trace.final_components.iter().map(set_to_vec).collect(),
        convention_singletons: trace.convention_singletons.clone(),
    }
}

pub fn obstruction_json(o: &Obstruction) -> ObstructionJson {
    ObstructionJson {
        obstruction_kind: o.kind.as_str(),
        vertices: o.vertices.clone(),
    }
}

pub fn well_forced_json(report: &WellForcedReport) -> WellForcedJson {
    WellForcedJson {
        verdict: report.verdict,
        method: report.method.as_str(),
        witness: witness_json(&report.witness),
    }
}

pub fn b_levels_json(decomposition: &BDecomposition) -> Vec<BLevelJson> {
    decomposition
        .levels
        .iter()
        .enumerate()
        .map(|(i, level)| BLevelJson {
            level: i,
            vertices: level.vertices.to_vec(),
            pseudoleaves: level
                .pseudoleaves
                .iter()
                .map(|(b, leaves)| (b.to_string(), leaves.to_vec()))
                .collect(),
        })
        .collect()
}

/// A census output line: the analysis fields plus a stream index and any
/// per-graph errors (the stream continues past them).
#[derive(Debug, Clone, Serialize)]
pub struct CensusLine {
    pub index: usize,
    #[serde(flatten)]
    pub report: AnalysisReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irrelevant_non_b: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_in_minimal: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusAggregate {
    pub aggregate: CensusTallies,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusTallies {
    pub graphs: usize,
    pub errors: usize,
    pub well_forced_true: usize,
    pub well_forced_false: usize,
    /// Spectrum (comma-joined) to number of graphs achieving it.
    pub spectrum_histogram: BTreeMap<String, usize>,
    /// Irrelevant vertices that are not B-vertices, listed per sighting.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irrelevant_non_b_sightings: Option<Vec<Sighting>>,
    /// B-vertices that appear in some minimal zero forcing set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_vertex_in_minimal_sightings: Option<Vec<Sighting>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sighting {
    pub index: usize,
    pub input: String,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub scope: VerifyScope,
    pub graphs_checked: usize,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<VerifyFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyScope {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_trees_up_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random_graphs: Option<RandomScope>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomScope {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub too_large: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyFailure {
    pub check: String,
    /// The offending graph as a single-line edge list.
    pub graph: String,
    pub detail: String,
}
