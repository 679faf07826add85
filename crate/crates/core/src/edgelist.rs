//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (m lines, 0-based; "u u" is a loop, repeats are parallel edges)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || {
        fields
            .next()
            .ok_or_else(|| parse_error(line_no, format!("expected two integers in {what}")))
            .and_then(|f| {
                f.parse::<usize>()
                    .map_err(|e| parse_error(line_no, format!("bad integer {f:?} in {what}: {e}")))
            })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(parse_error(line_no, format!("trailing fields in {what}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => header = Some(parse_pair(line_no, line, "header \"n m\"")?),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(parse_error(line_no, format!("more than the declared {m} edges")));
                }
                let (u, v) = parse_pair(line_no, line, "edge line")?;
                if u >= n || v >= n {
                    return Err(parse_error(
                        line_no,
                        format!("endpoint out of range in ({u}, {v}); n = {n}"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(last_line.max(1), "missing header \"n m\""))?;
    if edges.len() != m {
        return Err(parse_error(
            last_line + 1,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(graph: &Graph) -> String {
    write_edge_list_with_comments(graph, &[])
}

/// Like [`write_edge_list`], with each comment emitted as a leading `# ` line.
pub fn write_edge_list_with_comments(graph: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", graph.n(), graph.edge_count());
    for (u, v) in graph.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
