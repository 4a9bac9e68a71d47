//! graph6 and edge-list text formats.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::{Error, Result};

/// Largest order expressible in the one-byte graph6 header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (short form, `n <= 62`). An optional `>>graph6<<`
/// header and surrounding whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("bad size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(Error::Graph6(format!(
            "long-form size header; only n <= {GRAPH6_MAX_VERTICES} is supported"
        )));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if let Some(&byte) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("bad data byte {byte:#04x}")));
    }
    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if (body[bit / 6] - 63) >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::SizeLimit {
            op: "graph6 encoding",
            n,
            limit: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses the edge-list format: first non-blank line `n`, then one `u v` pair
/// per line, 0-based. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first_line,
        msg: format!("expected vertex count, found {header:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut parts = text.split_whitespace().map(str::parse::<usize>);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => {
                if u >= n || v >= n || u == v {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("invalid edge {u} {v} for n = {n}"),
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::EdgeList {
                    line,
                    msg: format!("expected `u v`, found {text:?}"),
                })
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Serializes to the edge-list format, edges ascending.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a graph from a file holding either one graph6 line or an edge list.
///
/// A graph6 size byte is never an ASCII digit, so a leading digit selects
/// the edge-list reader.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(&text)
    } else {
        parse_graph6(first)
    }
}
