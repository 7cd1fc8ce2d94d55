use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use forcekit::forcing::{
    enumerate_minimal_zfs, zero_forcing_number, ForcingError, SearchLimits,
};
use forcekit::graph::{classify, to_dot, NodeCategory};
use forcekit::tree::{b_decomposition, irrelevant_vertices, IrrelevantMode, TreeError};
use forcekit::wellforced::{is_well_forced_oracle, is_well_forced_tree, structural_witness};
use forcekit::Graph;

use crate::input::load_single;
use crate::report::{
    b_levels_json, obstruction_json, trace_json, well_forced_json, AnalysisReport, WellForcedJson,
    WitnessJson,
};
use crate::{CliError, WellForcedMode};

pub struct Args {
    pub input: String,
    pub index: Option<usize>,
    pub z: bool,
    pub spectrum: bool,
    pub irrelevant: bool,
    pub b_levels: bool,
    pub well_forced: Option<WellForcedMode>,
    pub obstruction: bool,
    pub dot: Option<PathBuf>,
    pub timing: bool,
    pub cap: usize,
}

fn cap_error(e: ForcingError) -> CliError {
    match e {
        ForcingError::InstanceTooLarge { n, cap } => {
            CliError::cap(format!("instance has n = {n}, cap is {cap}"))
        }
        other => CliError::usage(other.to_string()),
    }
}

pub fn decide_well_forced(g: &Graph, mode: WellForcedMode, cap: usize) -> Result<WellForcedJson, CliError> {
    let is_forest = classify(g).is_forest();
    match mode {
        WellForcedMode::Tree => {
            let (verdict, trace) = is_well_forced_tree(g).map_err(|e| match e {
                TreeError::NotAForest => CliError::usage("tree mode requires a forest"),
                other => CliError::usage(other.to_string()),
            })?;
            Ok(WellForcedJson {
                verdict,
                method: "tree-algorithm",
                witness: Some(trace_json(&trace)),
            })
        }
        WellForcedMode::Oracle => {
            let report = is_well_forced_oracle(g, cap).map_err(cap_error)?;
            Ok(well_forced_json(&report))
        }
        WellForcedMode::Auto => {
            if is_forest {
                decide_well_forced(g, WellForcedMode::Tree, cap)
            } else if g.n() <= cap {
                decide_well_forced(g, WellForcedMode::Oracle, cap)
            } else if let Some(found) = structural_witness(g) {
                // Beyond the oracle cap a certified obstruction still
                // settles the question negatively.
                Ok(WellForcedJson {
                    verdict: false,
                    method: "structural-witness",
                    witness: Some(WitnessJson::Obstruction {
                        obstruction: obstruction_json(&found),
                    }),
                })
            } else {
                Err(CliError::cap(format!(
                    "n = {} exceeds the oracle cap {cap} and no structural witness applies",
                    g.n()
                )))
            }
        }
    }
}

pub fn build_report(g: &Graph, args: &Args, input: crate::report::InputDescriptor) -> Result<AnalysisReport, CliError> {
    let started = Instant::now();
    let mut report = AnalysisReport {
        input,
        n: g.n(),
        m: g.edge_count(),
        z: None,
        spectrum: None,
        well_forced: None,
        irrelevant: None,
        b_levels: None,
        obstruction: None,
        timing_ms: None,
    };
    if args.z {
        let result = zero_forcing_number(g, &SearchLimits::with_cap(args.cap)).map_err(cap_error)?;
        report.z = Some(result.number);
    }
    if args.spectrum {
        let enumeration = enumerate_minimal_zfs(g, args.cap).map_err(cap_error)?;
        if report.z.is_none() {
            report.z = enumeration.spectrum.iter().next().copied();
        }
        report.spectrum = Some(enumeration.spectrum.iter().copied().collect());
    }
    if args.irrelevant {
        let mode = if classify(g).is_forest() {
            IrrelevantMode::TreeFast
        } else {
            IrrelevantMode::Oracle { cap: args.cap }
        };
        let set = irrelevant_vertices(g, mode).map_err(|e| match e {
            TreeError::Forcing(f) => cap_error(f),
            other => CliError::usage(other.to_string()),
        })?;
        report.irrelevant = Some(set.to_vec());
    }
    if args.b_levels {
        report.b_levels = Some(b_levels_json(&b_decomposition(g)));
    }
    if let Some(mode) = args.well_forced {
        report.well_forced = Some(decide_well_forced(g, mode, args.cap)?);
    }
    if args.obstruction {
        report.obstruction = structural_witness(g).as_ref().map(obstruction_json);
    }
    if args.timing {
        report.timing_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

pub fn run(args: Args) -> Result<u8, CliError> {
    let (g, descriptor) = load_single(&args.input, args.index)?;
    let report = build_report(&g, &args, descriptor)?;
    if let Some(dot_path) = &args.dot {
        let decomposition = b_decomposition(&g);
        let mut coloring: BTreeMap<usize, NodeCategory> = BTreeMap::new();
        for (i, level) in decomposition.levels.iter().enumerate() {
            for v in level.vertices.iter() {
                coloring.insert(v, NodeCategory::BLevel(i));
            }
            for leaves in level.pseudoleaves.values() {
                for v in leaves.iter() {
                    coloring.insert(v, NodeCategory::Pseudoleaf);
                }
            }
        }
        fs::write(dot_path, to_dot(&g, &coloring))
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", dot_path.display())))?;
    }
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(0)
}
