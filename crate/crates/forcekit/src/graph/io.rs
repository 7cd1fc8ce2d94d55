//! Reading and writing graphs: the native edge-list format, read-only
//! graph6 ingestion, and DOT export with node shading.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, VertexSet};

/// A parse failure, carrying the 1-based line number it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line (expected \"u v\")")]
    Malformed,
    #[error("malformed header (expected \"n <count>\")")]
    MalformedHeader,
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("invalid graph6 byte {byte:#04x}")]
    BadGraph6Byte { byte: u8 },
    #[error("graph6 record truncated")]
    TruncatedGraph6,
    #[error("graph6 header for more than 2^36 vertices is not supported")]
    Graph6TooLarge,
}

/// Parses the native edge-list format: an optional first significant line
/// `n <count>` declaring the vertex count, then one `u v` pair per line.
/// Blank lines and lines starting with `#` are skipped. Without a header
/// the vertex count is one more than the largest identifier mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut seen_header_or_edge = false;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        if !seen_header_or_edge && first == "n" {
            let count = parts
                .next()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedHeader,
                })?;
            if parts.next().is_some() {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedHeader,
                });
            }
            declared = Some(count);
            seen_header_or_edge = true;
            continue;
        }
        seen_header_or_edge = true;
        let u = first.parse::<usize>().map_err(|_| ParseError {
            line: line_no,
            kind: ParseErrorKind::Malformed,
        })?;
        let v = parts
            .next()
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or(ParseError {
                line: line_no,
                kind: ParseErrorKind::Malformed,
            })?;
        if parts.next().is_some() {
            return Err(ParseError {
                line: line_no,
                kind: ParseErrorKind::Malformed,
            });
        }
        edges.push((u, v, line_no));
    }

    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));

    // Validate edge by edge so errors name the offending line.
    let mut seen = std::collections::HashSet::new();
    let mut flat = Vec::with_capacity(edges.len());
    for &(u, v, line_no) in &edges {
        let fail = |kind: GraphError| ParseError {
            line: line_no,
            kind: ParseErrorKind::Graph(kind),
        };
        if u >= n {
            return Err(fail(GraphError::VertexOutOfRange { vertex: u, n }));
        }
        if v >= n {
            return Err(fail(GraphError::VertexOutOfRange { vertex: v, n }));
        }
        if u == v {
            return Err(fail(GraphError::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(GraphError::DuplicateEdge(u.min(v), u.max(v))));
        }
        flat.push((u, v));
    }
    Ok(Graph::from_edges(n, &flat).expect("edges validated above"))
}

/// Writes the native edge-list format with an explicit header, one edge
/// per line with `u < v`, in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn graph6_value(byte: u8, line: usize) -> Result<u64, ParseError> {
    if !(63..=126).contains(&byte) {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::BadGraph6Byte { byte },
        });
    }
    Ok(u64::from(byte - 63))
}

/// Decodes one graph6 record (a single line, without the trailing
/// newline). The optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(record: &str) -> Result<Graph, ParseError> {
    parse_graph6_line(record, 1)
}

fn parse_graph6_line(record: &str, line: usize) -> Result<Graph, ParseError> {
    let bytes = record
        .trim_end()
        .strip_prefix(">>graph6<<")
        .unwrap_or(record.trim_end())
        .as_bytes();
    if bytes.is_empty() {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::TruncatedGraph6,
        });
    }

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Graph6TooLarge,
            });
        }
        if bytes.len() < 4 {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::TruncatedGraph6,
            });
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | graph6_value(b, line)?;
        }
        (n as usize, 4)
    } else {
        (graph6_value(bytes[0], line)? as usize, 1)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::TruncatedGraph6,
        });
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    let mut current = 0u64;
    let mut remaining_in_current = 0u32;
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    'outer: for v in 1..n {
        for u in 0..v {
            if remaining_in_current == 0 {
                current = graph6_value(bytes[pos], line)?;
                pos += 1;
                remaining_in_current = 6;
            }
            remaining_in_current -= 1;
            if current >> remaining_in_current & 1 == 1 {
                edges.push((u, v));
            }
            bit_idx += 1;
            if bit_idx == bit_count {
                break 'outer;
            }
        }
    }

    Graph::from_edges(n, &edges).map_err(|e| ParseError {
        line,
        kind: ParseErrorKind::Graph(e),
    })
}

/// Decodes a graph6 file: one record per line, blank lines skipped.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6_line(line, idx + 1)?);
    }
    Ok(out)
}

/// Node shading categories for DOT export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeCategory {
    /// Vertex of the i-th removal level.
    BLevel(usize),
    Pseudoleaf,
    Seed,
    Plain,
}

const B_LEVEL_FILLS: [&str; 3] = ["darkgreen", "mediumseagreen", "palegreen"];

fn fill_for(category: NodeCategory) -> Option<&'static str> {
    match category {
        NodeCategory::BLevel(i) => Some(B_LEVEL_FILLS[i % B_LEVEL_FILLS.len()]),
        NodeCategory::Pseudoleaf => Some("khaki"),
        NodeCategory::Seed => Some("skyblue"),
        NodeCategory::Plain => None,
    }
}

/// Renders the graph as DOT, shading vertices by category. Vertices and
/// edges are emitted in ascending order so the output is deterministic.
pub fn to_dot(g: &Graph, coloring: &BTreeMap<usize, NodeCategory>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs: Vec<String> = Vec::new();
        if let Some(text) = g.label(v) {
            attrs.push(format!("label=\"{}\"", text.replace('"', "\\\"")));
        }
        if let Some(fill) = coloring.get(&v).copied().and_then(fill_for) {
            attrs.push(format!("style=filled,fillcolor={fill}"));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(","));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Convenience: shading map for a seed set alone.
pub fn seed_coloring(seed: &VertexSet) -> BTreeMap<usize, NodeCategory> {
    seed.iter().map(|v| (v, NodeCategory::Seed)).collect()
}
