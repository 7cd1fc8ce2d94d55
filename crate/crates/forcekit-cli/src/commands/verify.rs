use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use forcekit::families::all_trees;
use forcekit::graph::to_edge_list;
use forcekit::wellforced::verify::{random_connected_graph, verify_theorems, CheckStatus, VerifyError};
use forcekit::Graph;

use crate::report::{CheckTally, RandomScope, VerifyFailure, VerifyScope, VerifySummary};
use crate::CliError;

const MAX_TREE_SCOPE: usize = 10;
const MAX_RANDOM_N: usize = 10;
const MAX_RANDOM_COUNT: u64 = 10_000;

pub fn run(
    all_trees_up_to: Option<usize>,
    random_graphs: Option<Vec<u64>>,
    checks: Option<Vec<String>>,
    cap: usize,
) -> Result<u8, CliError> {
    if all_trees_up_to.is_none() && random_graphs.is_none() {
        return Err(CliError::usage(
            "verify needs a scope: --all-trees-up-to N and/or --random-graphs N COUNT SEED",
        ));
    }

    let mut graphs: Vec<Graph> = Vec::new();
    let mut scope = VerifyScope {
        all_trees_up_to: None,
        random_graphs: None,
    };

    if let Some(limit) = all_trees_up_to {
        if limit == 0 || limit > MAX_TREE_SCOPE {
            return Err(CliError::cap(format!(
                "--all-trees-up-to accepts 1..={MAX_TREE_SCOPE}, got {limit}"
            )));
        }
        scope.all_trees_up_to = Some(limit);
        for n in 1..=limit {
            graphs.extend(all_trees(n).expect("within the enumeration cap"));
        }
    }

    if let Some(params) = random_graphs {
        let [n, count, seed] = params[..] else {
            return Err(CliError::usage("--random-graphs expects N COUNT SEED"));
        };
        if n == 0 || n > MAX_RANDOM_N as u64 || count > MAX_RANDOM_COUNT {
            return Err(CliError::cap(format!(
                "--random-graphs accepts n in 1..={MAX_RANDOM_N} and count <= {MAX_RANDOM_COUNT}"
            )));
        }
        scope.random_graphs = Some(RandomScope {
            n: n as usize,
            count: count as usize,
            seed,
        });
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            graphs.push(random_connected_graph(n as usize, &mut rng));
        }
    }

    let mut tallies: BTreeMap<String, CheckTally> = BTreeMap::new();
    let mut failures = Vec::new();
    for g in &graphs {
        let report = verify_theorems(g, checks.as_deref(), cap).map_err(|e| match e {
            VerifyError::UnknownCheck(name) => CliError::usage(format!("unknown check: {name}")),
        })?;
        for (name, outcome) in report {
            let tally = tallies.entry(name.to_string()).or_default();
            match outcome.status {
                CheckStatus::Passed => tally.passed += 1,
                CheckStatus::Vacuous => tally.vacuous += 1,
                CheckStatus::TooLarge => tally.too_large += 1,
                CheckStatus::Failed => {
                    tally.failed += 1;
                    failures.push(VerifyFailure {
                        check: name.to_string(),
                        graph: to_edge_list(g).replace('\n', "; "),
                        detail: outcome.detail.unwrap_or_default(),
                    });
                }
            }
        }
    }

    let summary = VerifySummary {
        scope,
        graphs_checked: graphs.len(),
        checks: tallies,
        failures,
    };
    println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    Ok(if summary_has_failures(&summary) { 1 } else { 0 })
}

fn summary_has_failures(summary: &VerifySummary) -> bool {
    !summary.failures.is_empty()
}
