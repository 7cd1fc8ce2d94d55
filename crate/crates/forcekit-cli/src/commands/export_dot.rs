use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use forcekit::graph::{to_dot, NodeCategory};
use forcekit::tree::b_decomposition;

use crate::input::load_single;
use crate::CliError;

pub fn run(
    input: &str,
    index: Option<usize>,
    seed: Option<Vec<usize>>,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let (g, _) = load_single(input, index)?;
    let mut coloring: BTreeMap<usize, NodeCategory> = BTreeMap::new();
    let decomposition = b_decomposition(&g);
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
    // Seed marks win over decomposition shading.
    for v in seed.into_iter().flatten() {
        if v >= g.n() {
            return Err(CliError::usage(format!(
                "seed vertex {v} out of range for a graph on {} vertices",
                g.n()
            )));
        }
        coloring.insert(v, NodeCategory::Seed);
    }
    let text = to_dot(&g, &coloring);
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
