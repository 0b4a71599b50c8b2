//! Deterministic DOT and JSON renderings of `G(R)` and `G_SR`.

use serde::Serialize;

use crate::graph::Graph;
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn to_dot(name: &str, g: &Graph) -> String {
    let mut out = format!("graph \"{}\" {{\n", escape(name));
    for v in 0..g.order() {
        out.push_str(&format!("  {v} [label=\"{}\"];\n", escape(&g.label(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    spec: &'a RingSpec,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(spec: &RingSpec, g: &Graph) -> String {
    let doc = JsonGraph {
        spec,
        vertices: (0..g.order()).map(|v| g.label(v)).collect(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn render(spec: &RingSpec, name: &str, g: &Graph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(name, g),
        Format::Json => to_json(spec, g),
    }
}
