//! Acceptance suite: ten criteria, each printed as one pass/fail line.
//! Run with `cargo test -p forcekit-cli --test acceptance -- --nocapture`
//! to see every line. All combinatorial checks are exact; there are no
//! tolerances to tune.

use std::process::Command;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use forcekit::families::{all_trees, build, random_tree, FamilySpec};
use forcekit::forcing::{
    closure, enumerate_minimal_zfs, is_zfs, path_cover_zfs, reversal, zero_forcing_number,
    zfn_brute_force, PathChoice, SearchLimits,
};
use forcekit::graph::{classify, parse_edge_list, GraphClass};
use forcekit::tree::{
    b_decomposition, irrelevant_vertices, minimum_path_cover, star_reduction, IrrelevantMode,
};
use forcekit::wellforced::verify::{random_connected_graph, run_all_checks, CheckStatus};
use forcekit::wellforced::{
    family_theorem_verdict, genstar_well_forced, is_well_forced_oracle, is_well_forced_tree,
};
use forcekit::{Graph, VertexSet};

const CAP: usize = 20;

fn report(number: u8, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) if detail.is_empty() => {
            println!("acceptance criterion {number} ({name}): PASS");
        }
        Ok(detail) => {
            println!("acceptance criterion {number} ({name}): PASS — {detail}");
        }
        Err(detail) => {
            println!("acceptance criterion {number} ({name}): FAIL — {detail}");
            panic!("criterion {number} ({name}) failed: {detail}");
        }
    }
}

fn edge_line(g: &Graph) -> String {
    let pairs: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), pairs.join(","))
}

#[test]
fn criterion_1_tree_algorithm_agrees_with_oracle() {
    let mut checked = 0;
    for n in 3..=10 {
        for t in all_trees(n).unwrap() {
            let (algo, _) = is_well_forced_tree(&t).unwrap();
            let oracle = is_well_forced_oracle(&t, CAP).unwrap().verdict;
            if algo != oracle {
                report(
                    1,
                    "tree algorithm vs oracle",
                    Err(format!("disagreement on {}: algorithm {algo}, oracle {oracle}", edge_line(&t))),
                );
            }
            checked += 1;
        }
    }
    report(1, "tree algorithm vs oracle", Ok(format!("{checked} trees, 3 <= n <= 10")));
}

#[test]
fn criterion_2_irrelevant_iff_b_vertex_on_trees() {
    let mut checked = 0;
    for n in 1..=9 {
        for t in all_trees(n).unwrap() {
            let fast = irrelevant_vertices(&t, IrrelevantMode::TreeFast).unwrap();
            let oracle = irrelevant_vertices(&t, IrrelevantMode::Oracle { cap: CAP }).unwrap();
            if fast != oracle {
                report(
                    2,
                    "irrelevant iff B-vertex on trees",
                    Err(format!(
                        "on {}: B-vertices {fast} but oracle-irrelevant {oracle}",
                        edge_line(&t)
                    )),
                );
            }
            checked += 1;
        }
    }
    report(2, "irrelevant iff B-vertex on trees", Ok(format!("{checked} trees, n <= 9")));
}

#[test]
fn criterion_3_path_theorem() {
    for n in 1..=8 {
        let p = build(&FamilySpec::Path(n)).unwrap();
        let expected = n <= 3;
        let (algo, _) = is_well_forced_tree(&p).unwrap();
        let oracle = is_well_forced_oracle(&p, CAP).unwrap().verdict;
        let theorem = family_theorem_verdict(&FamilySpec::Path(n)).unwrap();
        if algo != expected || oracle != expected || theorem != expected {
            report(
                3,
                "paths well-forced iff n <= 3",
                Err(format!("P_{n}: algorithm {algo}, oracle {oracle}, rule {theorem}, expected {expected}")),
            );
        }
        let z_tree = zero_forcing_number(&p, &SearchLimits::default()).unwrap().number;
        let z_brute = zfn_brute_force(&p, CAP).unwrap().number;
        if z_tree != 1 || z_brute != 1 {
            report(3, "paths well-forced iff n <= 3", Err(format!("Z(P_{n}) = {z_tree}/{z_brute}, expected 1")));
        }
    }
    report(3, "paths well-forced iff n <= 3", Ok("n = 1..8, both routes".into()));
}

#[test]
fn criterion_4_figure_tree_fixture() {
    let text = std::fs::read_to_string(format!(
        "{}/tests/data/figure_tree.edges",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("fixture ships with the tests");
    let g = parse_edge_list(&text).unwrap();

    let d = b_decomposition(&g);
    let levels: Vec<Vec<usize>> = d.levels.iter().map(|l| l.vertices.to_vec()).collect();
    let expected_levels = vec![vec![0, 11, 20], vec![4, 15], vec![7, 10]];
    if levels != expected_levels {
        report(4, "figure tree fixture", Err(format!("levels {levels:?}, expected {expected_levels:?}")));
    }
    if levels.iter().map(Vec::len).collect::<Vec<_>>() != vec![3, 2, 2] {
        report(4, "figure tree fixture", Err("level sizes are not 3/2/2".into()));
    }

    let (reduced, _) = star_reduction(&g).unwrap();
    let reduced_class = classify(&reduced.graph);
    if reduced_class.class != GraphClass::Forest || reduced_class.components.len() != 2 {
        report(
            4,
            "figure tree fixture",
            Err(format!(
                "star reduction left {} component(s), expected a two-component forest",
                reduced_class.components.len()
            )),
        );
    }

    let (verdict, trace) = is_well_forced_tree(&g).unwrap();
    let finals: Vec<Vec<usize>> = trace.final_components.iter().map(|c| c.to_vec()).collect();
    if !verdict || finals != vec![vec![17, 18]] {
        report(
            4,
            "figure tree fixture",
            Err(format!("verdict {verdict}, final forest {finals:?}, expected the single K2 [17, 18]")),
        );
    }
    report(4, "figure tree fixture", Ok("B-levels 3/2/2, two-component reduction, final K2".into()));
}

fn leg_multisets(count: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(current: &mut Vec<usize>, remaining: usize, min: usize, max_len: usize, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for next in min..=max_len {
            current.push(next);
            extend(current, remaining - 1, next, max_len, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), count, 1, max_len, &mut out);
    out
}

#[test]
fn criterion_5_generalized_star_rule_vs_oracle() {
    let mut cases = 0;
    for legs in [3, 4] {
        for multiset in leg_multisets(legs, 4) {
            let spec = FamilySpec::GeneralizedStar(multiset.clone());
            let g = build(&spec).unwrap();
            let rule = genstar_well_forced(&multiset).unwrap();
            let oracle = is_well_forced_oracle(&g, CAP).unwrap();
            if oracle.verdict != rule {
                report(
                    5,
                    "generalized star rule vs oracle",
                    Err(format!("legs {multiset:?}: rule {rule}, oracle {}", oracle.verdict)),
                );
            }
            let z = zero_forcing_number(&g, &SearchLimits::default()).unwrap().number;
            if z != legs - 1 || oracle.z != Some(legs - 1) {
                report(
                    5,
                    "generalized star rule vs oracle",
                    Err(format!("legs {multiset:?}: Z = {z}, oracle min {:?}, expected {}", oracle.z, legs - 1)),
                );
            }
            cases += 1;
        }
    }
    report(5, "generalized star rule vs oracle", Ok(format!("{cases} leg multisets, 3-4 legs, lengths 1-4")));
}

#[test]
fn criterion_6_b_vertex_irrelevance_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut with_b = 0;
    let mut violations: Vec<String> = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let g = random_connected_graph(n, &mut rng);
        let b = b_decomposition(&g).b_vertices();
        if b.is_empty() {
            continue;
        }
        with_b += 1;
        let enumeration = enumerate_minimal_zfs(&g, CAP).unwrap();
        for s in &enumeration.sets {
            for v in b.iter() {
                if s.contains(v) {
                    violations.push(format!("B-vertex {v} in minimal set {s} of {}", edge_line(&g)));
                }
            }
        }
    }
    let outcome = if violations.is_empty() {
        Ok(format!("200 samples, {with_b} with B-vertices, none in any minimal set"))
    } else {
        // The claim this criterion encodes does not hold beyond forests:
        // second-level removal vertices can sit in minimal sets once
        // cycles are present (see notes and the pinned 6-vertex fixture
        // in the library's general_graph_bounds tests). Reported here
        // honestly rather than sampled around.
        Err(format!(
            "{} violation(s) among 200 samples ({with_b} with B-vertices); first: {}",
            violations.len(),
            violations[0]
        ))
    };
    report(6, "B-vertex irrelevance on random graphs", outcome);
}

fn partitions_into_parts(total: usize) -> Vec<Vec<usize>> {
    fn extend(current: &mut Vec<usize>, remaining: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            extend(current, remaining - next, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), total, total, &mut out);
    out
}

#[test]
fn criterion_7_family_verdicts() {
    let mut failures: Vec<String> = Vec::new();
    let mut cases = 0;
    let expect = |spec: FamilySpec, expected: bool, failures: &mut Vec<String>| {
        let g = build(&spec).unwrap();
        match is_well_forced_oracle(&g, CAP) {
            Ok(r) if r.verdict == expected => {}
            Ok(r) => failures.push(format!("{spec}: oracle {}, expected {expected}", r.verdict)),
            Err(e) => failures.push(format!("{spec}: {e}")),
        }
        if let Some(rule) = family_theorem_verdict(&spec) {
            if rule != expected {
                failures.push(format!("{spec}: family rule says {rule}, expected {expected}"));
            }
        }
    };

    for n in 3..=7 {
        expect(FamilySpec::Cycle(n), true, &mut failures);
        cases += 1;
    }
    for n in 1..=6 {
        expect(FamilySpec::Complete(n), true, &mut failures);
        cases += 1;
    }
    for leaves in 1..=6 {
        expect(FamilySpec::Star(leaves), true, &mut failures);
        cases += 1;
    }
    for rim in 3..=7 {
        expect(FamilySpec::Wheel(rim), true, &mut failures);
        cases += 1;
    }
    for total in 2..=7 {
        for parts in partitions_into_parts(total) {
            expect(FamilySpec::CompleteMultipartite(parts), true, &mut failures);
            cases += 1;
        }
    }
    for cycle in 3..=6 {
        expect(FamilySpec::CycleWithPendant(cycle), true, &mut failures);
        cases += 1;
    }
    // Coronas of every connected graph on 2..=5 vertices are not
    // well-forced; the connected corpus supplies the base graphs.
    let corpus = std::fs::read_to_string(format!(
        "{}/tests/data/connected7.g6",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("corpus ships with the tests");
    let graphs = forcekit::graph::parse_graph6_file(&corpus).unwrap();
    let mut corona_cases = 0;
    for base in graphs.iter().filter(|g| (2..=5).contains(&g.n())) {
        let corona = forcekit::families::corona_k1(base);
        match is_well_forced_oracle(&corona, CAP) {
            Ok(r) if !r.verdict => {}
            Ok(_) => failures.push(format!("corona of {} came back well-forced", edge_line(base))),
            Err(e) => failures.push(format!("corona of {}: {e}", edge_line(base))),
        }
        corona_cases += 1;
    }
    if corona_cases != 30 {
        failures.push(format!("expected 30 connected base graphs on 2..=5 vertices, saw {corona_cases}"));
    }
    cases += corona_cases;

    let outcome = if failures.is_empty() {
        Ok(format!("{cases} family fixtures"))
    } else {
        Err(failures.join("; "))
    };
    report(7, "family verdicts by oracle", outcome);
}

fn random_path_cover(t: &Graph, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut path_of: Vec<usize> = (0..n).collect();
    let mut paths: Vec<Option<Vec<usize>>> = (0..n).map(|v| Some(vec![v])).collect();
    let mut edges = t.edges();
    edges.shuffle(rng);
    for (u, v) in edges {
        if !rng.gen_bool(0.7) {
            continue;
        }
        let (pu, pv) = (path_of[u], path_of[v]);
        if pu == pv {
            continue;
        }
        let left = paths[pu].as_ref().expect("live path");
        let right = paths[pv].as_ref().expect("live path");
        let u_is_end = *left.first().unwrap() == u || *left.last().unwrap() == u;
        let v_is_end = *right.first().unwrap() == v || *right.last().unwrap() == v;
        if !u_is_end || !v_is_end {
            continue;
        }
        let mut left = paths[pu].take().expect("live path");
        let mut right = paths[pv].take().expect("live path");
        if *left.last().unwrap() != u {
            left.reverse();
        }
        if *right.first().unwrap() != v {
            right.reverse();
        }
        left.extend(right);
        for &w in &left {
            path_of[w] = pu;
        }
        paths[pu] = Some(left);
    }
    paths.into_iter().flatten().collect()
}

fn random_choice(path: &[usize], rng: &mut impl Rng) -> PathChoice {
    if path.len() >= 4 && rng.gen_bool(0.5) {
        let i = rng.gen_range(1..path.len() - 2);
        PathChoice::InternalPair(path[i], path[i + 1])
    } else if rng.gen_bool(0.5) {
        PathChoice::End(path[0])
    } else {
        PathChoice::End(*path.last().unwrap())
    }
}

#[test]
fn criterion_8_reversal_and_path_cover_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    for case in 0..500 {
        let n = rng.gen_range(1..=12);
        let t = random_tree(n, rng.gen());
        let cover = minimum_path_cover(&t).unwrap();
        let seed = VertexSet::with_members(
            n,
            cover.iter().map(|p| if rng.gen_bool(0.5) { p[0] } else { *p.last().unwrap() }),
        );
        let (_, realization) = closure(&t, &seed);
        match reversal(&t, &realization) {
            Ok(rev) => {
                if !is_zfs(&t, &rev) || rev.card() != seed.card() {
                    report(
                        8,
                        "reversal and path-cover seeding",
                        Err(format!("case {case}: reversal {rev} of {seed} fails on {}", edge_line(&t))),
                    );
                }
            }
            Err(e) => report(
                8,
                "reversal and path-cover seeding",
                Err(format!("case {case}: minimum seed did not force {}: {e}", edge_line(&t))),
            ),
        }
    }

    for case in 0..500 {
        let n = rng.gen_range(1..=12);
        let t = random_tree(n, rng.gen());
        let cover = random_path_cover(&t, &mut rng);
        let choices: Vec<PathChoice> = cover.iter().map(|p| random_choice(p, &mut rng)).collect();
        let seed = path_cover_zfs(&t, &cover, &choices).unwrap_or_else(|e| {
            report(
                8,
                "reversal and path-cover seeding",
                Err(format!("case {case}: cover rejected on {}: {e}", edge_line(&t))),
            );
            unreachable!()
        });
        if !is_zfs(&t, &seed) {
            report(
                8,
                "reversal and path-cover seeding",
                Err(format!(
                    "case {case}: seed {seed} from cover {cover:?} does not force {}",
                    edge_line(&t)
                )),
            );
        }
    }
    report(8, "reversal and path-cover seeding", Ok("500 + 500 seeded tree cases, n <= 12".into()));
}

#[test]
fn criterion_9_theorem_battery_on_trees() {
    let mut failures: Vec<String> = Vec::new();
    let mut non_vacuous: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
    let mut trees = 0;
    for n in 1..=8 {
        for t in all_trees(n).unwrap() {
            trees += 1;
            for (name, outcome) in run_all_checks(&t, CAP) {
                match outcome.status {
                    CheckStatus::Failed => failures.push(format!(
                        "{name} on {}: {}",
                        edge_line(&t),
                        outcome.detail.unwrap_or_default()
                    )),
                    CheckStatus::Passed => *non_vacuous.entry(name).or_default() += 1,
                    CheckStatus::Vacuous => {}
                    CheckStatus::TooLarge => {
                        failures.push(format!("{name} on {}: oracle unexpectedly over cap", edge_line(&t)))
                    }
                }
            }
        }
    }
    for required in ["thm-star-removal", "prop-star-removal-wf", "cor-b-irrelevant", "lem-tprime"] {
        if non_vacuous.get(required).copied().unwrap_or(0) == 0 {
            failures.push(format!("{required} never applied on the tree scope"));
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{trees} trees x 15 checks, every check exercised"))
    } else {
        Err(failures.join("; "))
    };
    report(9, "theorem battery over all trees up to n = 8", outcome);
}

#[test]
fn criterion_10_open_question_probe_census() {
    let corpus = format!("{}/tests/data/connected7.g6", env!("CARGO_MANIFEST_DIR"));
    let output = Command::new(env!("CARGO_BIN_EXE_forcekit"))
        .args(["census", "--graph6", &corpus, "--probe-open-question"])
        .output()
        .expect("binary runs");
    if output.status.code() != Some(0) {
        report(
            10,
            "open-question probe over connected graphs up to n = 7",
            Err(format!("census exited with {:?}", output.status.code())),
        );
    }
    let text = String::from_utf8(output.stdout).expect("utf-8 output");
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("every line is JSON"))
        .collect();
    if lines.len() != 997 {
        report(
            10,
            "open-question probe over connected graphs up to n = 7",
            Err(format!("expected 996 graph lines plus one aggregate, got {}", lines.len())),
        );
    }
    for line in &lines[..996] {
        if line.get("errors").is_some() {
            report(
                10,
                "open-question probe over connected graphs up to n = 7",
                Err(format!("per-graph error in line {line}")),
            );
        }
    }
    let aggregate = &lines[996]["aggregate"];
    if aggregate["graphs"] != 996 || !aggregate["irrelevant_non_b_sightings"].is_array() {
        report(
            10,
            "open-question probe over connected graphs up to n = 7",
            Err(format!("malformed aggregate {aggregate}")),
        );
    }
    let sightings = aggregate["irrelevant_non_b_sightings"].as_array().unwrap().len();
    let reverse = aggregate["b_vertex_in_minimal_sightings"]
        .as_array()
        .map(Vec::len)
        .unwrap_or(0);
    report(
        10,
        "open-question probe over connected graphs up to n = 7",
        Ok(format!(
            "996 graphs, well-formed stream; {sightings} irrelevant-non-B sightings, {reverse} B-in-minimal sightings (no outcome asserted)"
        )),
    );
}
