//! Plain-text edge lists:
//!
//! ```text
//! n 4
//! # label v 0 (0,a)
//! 0 1
//! 1 2
//! ```
//!
//! The header line is mandatory. Other `#` lines are comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |reason: String| GraphError::Parse { line: line_no, reason };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.trim_start().splitn(4, char::is_whitespace);
            if let (Some("label"), Some("v"), Some(v), Some(name)) = (parts.next(), parts.next(), parts.next(), parts.next()) {
                let v: usize = v.parse().map_err(|_| err(format!("bad label vertex `{v}`")))?;
                labels.insert(v, name.trim().to_string());
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        match vertex_count {
            None => match (tokens.next(), tokens.next(), tokens.next()) {
                (Some("n"), Some(count), None) => {
                    vertex_count = Some(count.parse::<usize>().map_err(|_| err(format!("bad vertex count `{count}`")))?);
                }
                _ => return Err(err("expected header `n <vertex_count>`".into())),
            },
            Some(_) => match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(u), Some(v), None) => {
                    let u = u.parse::<usize>().map_err(|_| err(format!("bad vertex `{u}`")))?;
                    let v = v.parse::<usize>().map_err(|_| err(format!("bad vertex `{v}`")))?;
                    edges.push((u, v));
                }
                _ => return Err(err("expected `u v`".into())),
            },
        }
    }
    let n = vertex_count.ok_or(GraphError::Parse { line: 0, reason: "missing header".into() })?;
    Ok(Graph::new(n, edges)?.with_labels(labels))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (v, name) in g.labels() {
        let _ = writeln!(out, "# label v {v} {name}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads and parses an edge-list file. I/O failures and parse failures are
/// reported separately so callers can map them to different exit codes.
pub fn read_edge_list(path: &Path) -> io::Result<Result<Graph, GraphError>> {
    Ok(parse_edge_list(&std::fs::read_to_string(path)?))
}
