//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the published format: the vertex count `N(n)`, then the
//! upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, each byte
//! offset by 63, zero-padded to a whole byte.
//!
//! The edge list is a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

const HEADER: &str = ">>graph6<<";

/// Parses a single graph, detecting the format: edge lists begin with a
/// decimal digit, which is never a legal first graph6 byte.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect(text) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
            let (_, line) = lines
                .next()
                .ok_or_else(|| Error::parse_byte(0, "empty input"))?;
            if let Some((i, _)) = lines.next() {
                return Err(Error::parse_line(i + 1, "more than one graph6 line"));
            }
            parse_graph6(line.trim())
        }
    }
}

/// Parses every graph in `text`: either one edge list, or one graph6 string
/// per non-blank line.
pub fn parse_graph_stream(text: &str) -> Result<Vec<Graph>> {
    match detect(text) {
        GraphFormat::EdgeList => Ok(vec![parse_edge_list(text)?]),
        GraphFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim()).map_err(|e| match e {
                    Error::Parse { message, position, .. } => Error::parse_line(
                        i + 1,
                        format!("{message} (byte {position})"),
                    ),
                    other => other,
                })
            })
            .collect(),
    }
}

fn detect(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.as_bytes()[0].is_ascii_digit() => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => {
            let mut out = format!("{} {}\n", g.n(), g.m());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    }
}

pub(crate) fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

fn parse_graph6(line: &str) -> Result<Graph> {
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse_byte(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let six = |i: usize| -> Result<usize> {
        body.get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| Error::parse_byte(base + i, "truncated vertex count"))
    };
    let (n, mut pos) = match body.first() {
        None => return Err(Error::parse_byte(base, "empty graph6 string")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                let mut n = 0usize;
                for k in 2..8 {
                    n = (n << 6) | six(k)?;
                }
                (n, 8)
            } else {
                (((six(1)? << 12) | (six(2)? << 6) | six(3)?), 4)
            }
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(Error::parse_byte(
            base + pos,
            format!(
                "expected {need} adjacency bytes for n = {n}, found {}",
                body.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = (body[pos + k / 6] - 63) as usize;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = (body[pos - 1] - 63) as usize;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::parse_byte(base + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges).map_err(|e| Error::parse_byte(base, e.to_string()))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse_line(1, "missing `n m` header"))?;
    let [n, m] = parse_pair(hline, header)?;
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (lno, line) in lines {
        let [u, v] = parse_pair(lno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse_line(
                lno,
                format!("vertex index out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(Error::parse_line(lno, format!("loop at vertex {u}")));
        }
        if g.adj[u].contains(v) {
            return Err(Error::parse_line(lno, format!("duplicate edge {u} {v}")));
        }
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        count += 1;
        if count > m {
            return Err(Error::parse_line(lno, format!("more than the declared {m} edges")));
        }
    }
    if count != m {
        return Err(Error::parse_line(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn parse_pair(lno: usize, line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse_line(lno, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse_line(lno, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::parse_line(lno, "expected exactly two integers"));
    }
    Ok(pair)
}
