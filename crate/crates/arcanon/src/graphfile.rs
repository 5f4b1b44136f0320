//! The text format for graphs: `#` comments, a `p ca <n> <m>` header,
//! exactly m `e <u> <v>` lines and optional `c <v> <color>` lines.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, format!("bad {what}: {tok}")))
}

/// Parse a graph file. Line numbers in errors are 1-based.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut expected_edges = 0usize;
    let mut edges_seen = 0usize;
    let mut colored: BTreeSet<Vertex> = BTreeSet::new();
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if g.is_some() {
                    return Err(err(lineno, "duplicate header"));
                }
                let [_, kind, n, m] = fields[..] else {
                    return Err(err(lineno, "header must be `p ca <n> <m>`"));
                };
                if kind != "ca" {
                    return Err(err(lineno, format!("unknown problem kind: {kind}")));
                }
                let n: usize = parse_num(n, lineno, "vertex count")?;
                expected_edges = parse_num(m, lineno, "edge count")?;
                g = Some(Graph::new(n));
            }
            "e" => {
                let g = g.as_mut().ok_or_else(|| err(lineno, "edge before header"))?;
                let [_, u, v] = fields[..] else {
                    return Err(err(lineno, "edge line must be `e <u> <v>`"));
                };
                let u: Vertex = parse_num(u, lineno, "vertex id")?;
                let v: Vertex = parse_num(v, lineno, "vertex id")?;
                if edges_seen == expected_edges {
                    return Err(err(lineno, "more edge lines than declared"));
                }
                for id in [u, v] {
                    if id == 0 || id as usize > g.n() {
                        return Err(err(lineno, format!("vertex id {id} out of range")));
                    }
                }
                if u == v || g.is_edge(u, v) {
                    return Err(err(lineno, format!("bad or duplicate edge {u} {v}")));
                }
                g.add_edge(u, v)
                    .map_err(|e| err(lineno, e.to_string()))?;
                edges_seen += 1;
            }
            "c" => {
                let g = g.as_mut().ok_or_else(|| err(lineno, "color before header"))?;
                let [_, v, color] = fields[..] else {
                    return Err(err(lineno, "color line must be `c <v> <color>`"));
                };
                let v: Vertex = parse_num(v, lineno, "vertex id")?;
                let color: u64 = parse_num(color, lineno, "color")?;
                if !colored.insert(v) {
                    return Err(err(lineno, format!("duplicate color for vertex {v}")));
                }
                g.set_color(v, color)
                    .map_err(|e| err(lineno, e.to_string()))?;
            }
            other => return Err(err(lineno, format!("unknown line kind: {other}"))),
        }
    }

    let g = g.ok_or_else(|| err(last_line + 1, "missing `p ca <n> <m>` header"))?;
    if edges_seen != expected_edges {
        return Err(err(
            last_line + 1,
            format!("declared {expected_edges} edges, found {edges_seen}"),
        ));
    }
    Ok(g)
}

/// Render a graph in the same format; nonzero colors are written out.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p ca {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for v in g.vertices() {
        if g.color(v) != 0 {
            out.push_str(&format!("c {} {}\n", v, g.color(v)));
        }
    }
    out
}
