use std::fs;
use std::path::Path;

use forcekit::families::{build, FamilySpec};
use forcekit::graph::to_edge_list;

use crate::CliError;

pub fn run(spec: &str, output: Option<&Path>) -> Result<u8, CliError> {
    let spec = FamilySpec::parse(spec).map_err(|e| CliError::usage(e.to_string()))?;
    let g = build(&spec).map_err(|e| CliError::usage(e.to_string()))?;
    let text = to_edge_list(&g);
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
