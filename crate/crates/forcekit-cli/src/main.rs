//! forcekit: zero forcing analysis from the command line.
//!
//! Subcommands: analyze (per-graph report), verify (theorem battery over
//! tree/random scopes), census (streamed reports over families or graph6
//! files), build (family to edge list), export-dot.
//!
//! Exit codes: 0 success or all checks passed, 1 check failures, 2 usage
//! or parse errors, 3 cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use forcekit::forcing::DEFAULT_SEARCH_CAP;

mod commands;
mod input;
mod report;

use report::{ErrorBody, ErrorObject};

#[derive(Debug)]
pub struct CliError {
    kind: &'static str,
    message: String,
    code: u8,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: "usage",
            message: message.into(),
            code: 2,
        }
    }
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            kind: "parse",
            message: message.into(),
            code: 2,
        }
    }
    pub fn cap(message: impl Into<String>) -> Self {
        CliError {
            kind: "cap-exceeded",
            message: message.into(),
            code: 3,
        }
    }
    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            kind: "io",
            message: message.into(),
            code: 2,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "forcekit",
    version,
    about = "Zero forcing analysis: closures, minimal forcing sets, B-vertex levels, well-forced trees"
)]
struct Cli {
    /// Override the exponential-search cap (default 20; env FORCEKIT_MAX_N).
    #[arg(long, global = true, value_name = "N")]
    max_oracle_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WellForcedMode {
    Auto,
    Tree,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph (family spec, edge-list file, or graph6 file).
    Analyze {
        /// Family spec like "path:5" or "genstar:1,1,3", or a file path.
        input: String,
        /// Record to pick from a graph6 file (default 0).
        #[arg(long)]
        index: Option<usize>,
        /// Compute the zero forcing number with a witness.
        #[arg(long)]
        z: bool,
        /// Enumerate minimal zero forcing sets and report the spectrum.
        #[arg(long)]
        spectrum: bool,
        /// Report the vertices in no minimal zero forcing set.
        #[arg(long)]
        irrelevant: bool,
        /// Report the B-vertex levels and pseudoleaves.
        #[arg(long)]
        b_levels: bool,
        /// Decide well-forcedness (auto: tree algorithm on forests,
        /// oracle otherwise).
        #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "auto")]
        well_forced: Option<WellForcedMode>,
        /// Report a structural obstruction to well-forcedness, if any.
        #[arg(long)]
        obstruction: bool,
        /// Write a DOT rendering with B-level shading to this file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Include wall-clock timing in the report (off by default so
        /// identical inputs yield byte-identical reports).
        #[arg(long)]
        timing: bool,
    },
    /// Run the theorem-check battery over generated graphs.
    Verify {
        /// Check every non-isomorphic tree with up to N vertices (N <= 10).
        #[arg(long, value_name = "N")]
        all_trees_up_to: Option<usize>,
        /// Check COUNT seeded random connected graphs on N vertices:
        /// --random-graphs N COUNT SEED (N <= 10).
        #[arg(long, num_args = 3, value_names = ["N", "COUNT", "SEED"])]
        random_graphs: Option<Vec<u64>>,
        /// Comma-separated subset of check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
    },
    /// Stream per-graph reports over a family range or a graph6 file.
    Census {
        /// Family to sweep: all-trees, path, cycle, star, complete,
        /// wheel, empty, cyclepend.
        #[arg(long, value_name = "KIND")]
        family: Option<String>,
        /// Largest size for --family all-trees.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Inclusive parameter range "A..B" for single-parameter families.
        #[arg(long, value_name = "A..B")]
        range: Option<String>,
        /// graph6 file, one record per line.
        #[arg(long, value_name = "FILE")]
        graph6: Option<PathBuf>,
        /// Compare oracle-irrelevant vertices against B-vertices and
        /// report any irrelevant non-B sightings.
        #[arg(long)]
        probe_open_question: bool,
        /// Worker threads for the census (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a family graph as an edge list.
    Build {
        spec: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Render a graph as DOT with B-level shading.
    ExportDot {
        input: String,
        #[arg(long)]
        index: Option<usize>,
        /// Mark these vertices as seeds, e.g. --seed 0,2,5.
        #[arg(long, value_delimiter = ',')]
        seed: Option<Vec<usize>>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

/// Flag beats environment beats default; raising the cap past the
/// default gets a loud warning since everything behind it is 2^n.
fn resolve_cap(flag: Option<usize>) -> usize {
    let from_env = match std::env::var("FORCEKIT_MAX_N") {
        Ok(text) => match text.parse::<usize>() {
            Ok(v) => Some(v),
            Err(_) => {
                eprintln!("warning: ignoring invalid FORCEKIT_MAX_N={text:?}");
                None
            }
        },
        Err(_) => None,
    };
    let cap = flag.or(from_env).unwrap_or(DEFAULT_SEARCH_CAP);
    if cap > DEFAULT_SEARCH_CAP {
        eprintln!(
            "warning: oracle cap {cap} exceeds the default {DEFAULT_SEARCH_CAP}; subset searches grow as 2^n"
        );
    }
    cap
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = resolve_cap(cli.max_oracle_n);
    let outcome = match cli.command {
        Command::Analyze {
            input,
            index,
            z,
            spectrum,
            irrelevant,
            b_levels,
            well_forced,
            obstruction,
            dot,
            timing,
        } => commands::analyze::run(commands::analyze::Args {
            input,
            index,
            z,
            spectrum,
            irrelevant,
            b_levels,
            well_forced,
            obstruction,
            dot,
            timing,
            cap,
        }),
        Command::Verify {
            all_trees_up_to,
            random_graphs,
            checks,
        } => commands::verify::run(all_trees_up_to, random_graphs, checks, cap),
        Command::Census {
            family,
            max_n,
            range,
            graph6,
            probe_open_question,
            jobs,
        } => commands::census::run(commands::census::Args {
            family,
            max_n,
            range,
            graph6,
            probe_open_question,
            jobs,
            cap,
        }),
        Command::Build { spec, output } => commands::build::run(&spec, output.as_deref()),
        Command::ExportDot {
            input,
            index,
            seed,
            output,
        } => commands::export_dot::run(&input, index, seed, output.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let body = ErrorObject {
                error: ErrorBody {
                    kind: e.kind,
                    message: e.message,
                },
            };
            println!("{}", serde_json::to_string(&body).expect("error object serializes"));
            ExitCode::from(e.code)
        }
    }
}
