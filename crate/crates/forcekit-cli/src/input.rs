//! Input resolution: a positional input is a family spec when its prefix
//! names a known family, otherwise a file path holding an edge list or
//! graph6 records.

use std::fs;
use std::path::Path;

use forcekit::families::{build, FamilyError, FamilySpec};
use forcekit::graph::{parse_edge_list, parse_graph6_file};
use forcekit::Graph;

use crate::report::InputDescriptor;
use crate::CliError;

pub fn looks_like_graph6(path: &Path, content: &str) -> bool {
    if path.extension().is_some_and(|e| e == "g6") {
        return true;
    }
    content.trim_start().starts_with(">>graph6<<")
}

/// Loads one graph: a family spec string, an edge-list file, or one
/// record (chosen by `index`, default 0) of a graph6 file.
pub fn load_single(input: &str, index: Option<usize>) -> Result<(Graph, InputDescriptor), CliError> {
    match FamilySpec::parse(input) {
        Ok(spec) => {
            let g = build(&spec).map_err(|e| CliError::usage(e.to_string()))?;
            Ok((
                g,
                InputDescriptor {
                    kind: "family",
                    value: spec.to_string(),
                    index: None,
                },
            ))
        }
        Err(FamilyError::UnknownKind(_)) => load_from_file(input, index),
        Err(e) => Err(CliError::usage(e.to_string())),
    }
}

fn load_from_file(input: &str, index: Option<usize>) -> Result<(Graph, InputDescriptor), CliError> {
    let path = Path::new(input);
    let content = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {input}: {e}")))?;
    if looks_like_graph6(path, &content) {
        let graphs = parse_graph6_file(&content).map_err(|e| CliError::parse(e.to_string()))?;
        let idx = index.unwrap_or(0);
        let g = graphs
            .get(idx)
            .cloned()
            .ok_or_else(|| CliError::usage(format!("{input} has {} graphs, index {idx} is out of range", graphs.len())))?;
        Ok((
            g,
            InputDescriptor {
                kind: "graph6",
                value: input.to_string(),
                index: Some(idx),
            },
        ))
    } else {
        let g = parse_edge_list(&content).map_err(|e| CliError::parse(e.to_string()))?;
        Ok((
            g,
            InputDescriptor {
                kind: "edge-list",
                value: input.to_string(),
                index: None,
            },
        ))
    }
}
