use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use rayon::prelude::*;

use forcekit::families::{all_trees, build, FamilySpec, ALL_TREES_CAP};
use forcekit::forcing::enumerate_minimal_zfs;
use forcekit::graph::{classify, parse_graph6_file};
use forcekit::tree::{b_decomposition, minimum_path_cover};
use forcekit::wellforced::is_well_forced_tree;
use forcekit::{Graph, VertexSet};

use crate::report::{
    trace_json, AnalysisReport, CensusAggregate, CensusLine, CensusTallies, InputDescriptor,
    Sighting, WellForcedJson, WitnessJson,
};
use crate::CliError;

pub struct Args {
    pub family: Option<String>,
    pub max_n: Option<usize>,
    pub range: Option<String>,
    pub graph6: Option<PathBuf>,
    pub probe_open_question: bool,
    pub jobs: Option<usize>,
    pub cap: usize,
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("range must look like A..B, got {text:?}")))?;
    let lo = a.trim().parse::<usize>();
    let hi = b.trim().parse::<usize>();
    match (lo, hi) {
        (Ok(lo), Ok(hi)) if lo <= hi => Ok((lo, hi)),
        _ => Err(CliError::usage(format!("range must look like A..B, got {text:?}"))),
    }
}

fn collect_inputs(args: &Args) -> Result<Vec<(Graph, InputDescriptor)>, CliError> {
    match (&args.family, &args.graph6) {
        (Some(_), Some(_)) => Err(CliError::usage("pick one source: --family or --graph6")),
        (None, None) => Err(CliError::usage("census needs a source: --family or --graph6")),
        (Some(kind), None) => collect_family(kind, args),
        (None, Some(path)) => {
            let content = fs::read_to_string(path)
                .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
            let graphs = parse_graph6_file(&content).map_err(|e| CliError::parse(e.to_string()))?;
            Ok(graphs
                .into_iter()
                .enumerate()
                .map(|(i, g)| {
                    (
                        g,
                        InputDescriptor {
                            kind: "graph6",
                            value: path.display().to_string(),
                            index: Some(i),
                        },
                    )
                })
                .collect())
        }
    }
}

fn collect_family(kind: &str, args: &Args) -> Result<Vec<(Graph, InputDescriptor)>, CliError> {
    if kind == "all-trees" {
        let max_n = args
            .max_n
            .ok_or_else(|| CliError::usage("--family all-trees needs --max-n N"))?;
        if max_n == 0 || max_n > ALL_TREES_CAP {
            return Err(CliError::cap(format!(
                "--max-n accepts 1..={ALL_TREES_CAP}, got {max_n}"
            )));
        }
        let mut out = Vec::new();
        for n in 1..=max_n {
            for (i, t) in all_trees(n).expect("within cap").into_iter().enumerate() {
                out.push((
                    t,
                    InputDescriptor {
                        kind: "family",
                        value: format!("all-trees:n={n}"),
                        index: Some(i),
                    },
                ));
            }
        }
        return Ok(out);
    }
    const SWEEPABLE: [&str; 7] = ["path", "cycle", "star", "complete", "wheel", "empty", "cyclepend"];
    if !SWEEPABLE.contains(&kind) {
        return Err(CliError::usage(format!(
            "census sweeps all-trees or one of {}; got {kind:?}",
            SWEEPABLE.join("/")
        )));
    }
    let range = args
        .range
        .as_deref()
        .ok_or_else(|| CliError::usage("family sweeps need --range A..B"))?;
    let (lo, hi) = parse_range(range)?;
    let mut out = Vec::new();
    for k in lo..=hi {
        let spec = FamilySpec::parse(&format!("{kind}:{k}"))
            .map_err(|e| CliError::usage(e.to_string()))?;
        match build(&spec) {
            Ok(g) => out.push((
                g,
                InputDescriptor {
                    kind: "family",
                    value: spec.to_string(),
                    index: None,
                },
            )),
            // Sub-threshold parameters (e.g. cycle:2) are skipped, not
            // fatal: a range may legitimately start below a family's
            // minimum.
            Err(_) => continue,
        }
    }
    Ok(out)
}

fn census_line(index: usize, g: &Graph, input: InputDescriptor, cap: usize, probe: bool) -> CensusLine {
    let mut errors = Vec::new();
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
    let is_forest = classify(g).is_forest();

    let enumeration = if g.n() <= cap {
        match enumerate_minimal_zfs(g, cap) {
            Ok(e) => Some(e),
            Err(e) => {
                errors.push(e.to_string());
                None
            }
        }
    } else {
        errors.push(format!("enumeration skipped: n = {} exceeds cap {cap}", g.n()));
        None
    };

    if let Some(e) = &enumeration {
        report.z = e.spectrum.iter().next().copied();
        report.spectrum = Some(e.spectrum.iter().copied().collect());
    } else if is_forest {
        report.z = Some(minimum_path_cover(g).expect("forest").len());
    }

    if is_forest {
        let (verdict, trace) = is_well_forced_tree(g).expect("forest");
        report.well_forced = Some(WellForcedJson {
            verdict,
            method: "tree-algorithm",
            witness: Some(trace_json(&trace)),
        });
    } else if let Some(e) = &enumeration {
        let verdict = e.spectrum.len() <= 1;
        let witness = if verdict {
            None
        } else {
            e.extremes().map(|(small, large)| WitnessJson::SpectrumPair {
                small: small.to_vec(),
                large: large.to_vec(),
            })
        };
        report.well_forced = Some(WellForcedJson {
            verdict,
            method: "oracle",
            witness,
        });
    }

    let mut irrelevant_non_b = None;
    let mut b_in_minimal = None;
    if probe {
        let decomposition = b_decomposition(g);
        report.b_levels = Some(crate::report::b_levels_json(&decomposition));
        if let Some(e) = &enumeration {
            let mut in_some = VertexSet::new(g.n());
            for s in &e.sets {
                in_some.union_with(s);
            }
            let mut irrelevant = in_some.complement();
            report.irrelevant = Some(irrelevant.to_vec());
            let b = decomposition.b_vertices();
            irrelevant.difference_with(&b);
            irrelevant_non_b = Some(irrelevant.to_vec());
            let mut b_hit = b;
            b_hit.intersect_with(&in_some);
            b_in_minimal = Some(b_hit.to_vec());
        } else {
            errors.push("open-question probe skipped: no enumeration".into());
        }
    }

    CensusLine {
        index,
        report,
        errors,
        irrelevant_non_b,
        b_in_minimal,
    }
}

pub fn run(args: Args) -> Result<u8, CliError> {
    let inputs = collect_inputs(&args)?;
    let cap = args.cap;
    let probe = args.probe_open_question;

    let compute = || -> Vec<CensusLine> {
        inputs
            .par_iter()
            .enumerate()
            .map(|(i, (g, descriptor))| census_line(i, g, descriptor.clone(), cap, probe))
            .collect()
    };
    let lines = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| CliError::usage(format!("cannot build worker pool: {e}")))?
            .install(compute),
        None => compute(),
    };

    let mut tallies = CensusTallies {
        graphs: lines.len(),
        errors: 0,
        well_forced_true: 0,
        well_forced_false: 0,
        spectrum_histogram: BTreeMap::new(),
        irrelevant_non_b_sightings: probe.then(Vec::new),
        b_vertex_in_minimal_sightings: probe.then(Vec::new),
    };
    for line in &lines {
        println!("{}", serde_json::to_string(line).expect("line serializes"));
        if !line.errors.is_empty() {
            tallies.errors += 1;
        }
        match line.report.well_forced.as_ref().map(|w| w.verdict) {
            Some(true) => tallies.well_forced_true += 1,
            Some(false) => tallies.well_forced_false += 1,
            None => {}
        }
        if let Some(spectrum) = &line.report.spectrum {
            let key = spectrum
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            *tallies.spectrum_histogram.entry(key).or_default() += 1;
        }
        let describe = |line: &CensusLine| {
            format!(
                "{}{}",
                line.report.input.value,
                line.report
                    .input
                    .index
                    .map(|i| format!("#{i}"))
                    .unwrap_or_default()
            )
        };
        if let (Some(sightings), Some(non_b)) = (
            tallies.irrelevant_non_b_sightings.as_mut(),
            line.irrelevant_non_b.as_ref(),
        ) {
            if !non_b.is_empty() {
                sightings.push(Sighting {
                    index: line.index,
                    input: describe(line),
                    vertices: non_b.clone(),
                });
            }
        }
        if let (Some(sightings), Some(hits)) = (
            tallies.b_vertex_in_minimal_sightings.as_mut(),
            line.b_in_minimal.as_ref(),
        ) {
            if !hits.is_empty() {
                sightings.push(Sighting {
                    index: line.index,
                    input: describe(line),
                    vertices: hits.clone(),
                });
            }
        }
    }
    let aggregate = CensusAggregate { aggregate: tallies };
    println!("{}", serde_json::to_string(&aggregate).expect("aggregate serializes"));
    Ok(0)
}
