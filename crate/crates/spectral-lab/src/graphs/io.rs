//! Line-oriented graph file format.
//!
//! ```text
//! graph combinatorial|metric
//! v <label> [boundary]
//! e <label1> <label2> <weight-or-length>
//! ```
//!
//! `#` starts a comment. Numbers are written in shortest round-trip form, so
//! save followed by load reproduces the graph exactly.

use super::{CombinatorialGraph, MetricGraph};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

/// A parsed graph file of either kind.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFile {
    Combinatorial(CombinatorialGraph),
    Metric(MetricGraph),
}

impl GraphFile {
    pub fn as_combinatorial(&self) -> Result<&CombinatorialGraph> {
        match self {
            GraphFile::Combinatorial(g) => Ok(g),
            GraphFile::Metric(_) => {
                Err(Error::InvalidArgument("expected a combinatorial graph".into()))
            }
        }
    }

    pub fn as_metric(&self) -> Result<&MetricGraph> {
        match self {
            GraphFile::Metric(g) => Ok(g),
            GraphFile::Combinatorial(_) => {
                Err(Error::InvalidArgument("expected a metric graph".into()))
            }
        }
    }
}

/// Serialize a graph to the text format.
pub fn save_graph(file: &GraphFile) -> String {
    let mut out = String::new();
    match file {
        GraphFile::Combinatorial(g) => {
            out.push_str("graph combinatorial\n");
            write_body(&mut out, g.vertex_count(), |v| (g.label(super::VertexId(v)), g.is_boundary(super::VertexId(v))), g.edge_count(), |e| {
                let (a, b) = g.endpoints(super::EdgeId(e));
                (g.label(a), g.label(b), g.weight(super::EdgeId(e)))
            });
        }
        GraphFile::Metric(g) => {
            out.push_str("graph metric\n");
            write_body(&mut out, g.vertex_count(), |v| (g.label(super::VertexId(v)), g.is_boundary(super::VertexId(v))), g.edge_count(), |e| {
                let (a, b) = g.endpoints(super::EdgeId(e));
                (g.label(a), g.label(b), g.length(super::EdgeId(e)))
            });
        }
    }
    out
}

fn write_body<'a>(
    out: &mut String,
    nv: usize,
    vertex: impl Fn(usize) -> (&'a str, bool),
    ne: usize,
    edge: impl Fn(usize) -> (&'a str, &'a str, f64),
) {
    for v in 0..nv {
        let (label, boundary) = vertex(v);
        if boundary {
            writeln!(out, "v {label} boundary").unwrap();
        } else {
            writeln!(out, "v {label}").unwrap();
        }
    }
    for e in 0..ne {
        let (a, b, value) = edge(e);
        writeln!(out, "e {a} {b} {value}").unwrap();
    }
}

/// Parse the text format. String labels are mapped to dense ids in order of
/// first appearance; the label table is persisted in the graph itself.
pub fn load_graph_str(text: &str) -> Result<GraphFile> {
    let mut kind: Option<&str> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut boundary: Vec<bool> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let head = tok.next().unwrap();
        let ctx = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match head {
            "graph" => {
                let k = tok.next().ok_or_else(|| ctx("missing graph kind"))?;
                if k != "combinatorial" && k != "metric" {
                    return Err(ctx("graph kind must be combinatorial or metric"));
                }
                kind = Some(if k == "combinatorial" { "c" } else { "m" });
            }
            "v" => {
                let label = tok.next().ok_or_else(|| ctx("missing vertex label"))?;
                if ids.contains_key(label) {
                    return Err(ctx(&format!("duplicate vertex label {label:?}")));
                }
                let is_boundary = match tok.next() {
                    None => false,
                    Some("boundary") => true,
                    Some(other) => return Err(ctx(&format!("unexpected token {other:?}"))),
                };
                ids.insert(label.to_string(), labels.len());
                labels.push(label.to_string());
                boundary.push(is_boundary);
            }
            "e" => {
                let a = tok.next().ok_or_else(|| ctx("missing edge endpoint"))?;
                let b = tok.next().ok_or_else(|| ctx("missing edge endpoint"))?;
                let w: f64 = tok
                    .next()
                    .ok_or_else(|| ctx("missing edge value"))?
                    .parse()
                    .map_err(|_| ctx("edge value is not a number"))?;
                let ia = *ids.get(a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
                let ib = *ids.get(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
                edges.push((ia, ib, w));
            }
            other => return Err(ctx(&format!("unknown directive {other:?}"))),
        }
    }

    match kind {
        Some("c") => Ok(GraphFile::Combinatorial(CombinatorialGraph::new(labels, boundary, edges))),
        Some("m") => Ok(GraphFile::Metric(MetricGraph::new(labels, boundary, edges))),
        _ => Err(Error::Parse("missing `graph combinatorial|metric` header".into())),
    }
}

/// Load a graph file from disk.
pub fn load_graph(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path)?;
    load_graph_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build;
    use rand::SeedableRng;

    #[test]
    fn save_load_round_trip_combinatorial() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let g = build::random_combinatorial(&mut rng, 17, 10, 5, 0.25, 3.0);
        let file = GraphFile::Combinatorial(g);
        let text = save_graph(&file);
        let back = load_graph_str(&text).unwrap();
        assert_eq!(file, back);
        // and the serialization itself is a fixed point
        assert_eq!(text, save_graph(&back));
    }

    #[test]
    fn save_load_round_trip_metric() {
        let m = build::metric_star(&[0.5, 1.25, 2.0]).unwrap();
        let file = GraphFile::Metric(m);
        let back = load_graph_str(&save_graph(&file)).unwrap();
        assert_eq!(file, back);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a comment\ngraph combinatorial\n\nv a boundary\nv b # trailing\nv c boundary\ne a b 1.0\ne b c 2.5\n";
        let g = load_graph_str(text).unwrap();
        let g = g.as_combinatorial().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.weight(crate::graphs::EdgeId(1)), 2.5);
    }

    #[test]
    fn missing_header_is_an_error() {
        assert!(load_graph_str("v a\nv b\ne a b 1\n").is_err());
    }

    #[test]
    fn unknown_label_is_an_error() {
        let text = "graph metric\nv a\nv b\ne a z 1\n";
        assert!(matches!(load_graph_str(text), Err(Error::UnknownLabel(_))));
    }
}
