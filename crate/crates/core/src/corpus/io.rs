//! graph6 and edge-list formats.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with `u < v`, in lexicographic order when emitted. Blank lines and lines
//! starting with `#` are ignored when parsing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::vset::MAX_VERTICES;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Graph6,
    Edgelist,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::Edgelist => "edgelist",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            _ => Err(Error::InvalidParameters(format!("unknown graph format `{s}`"))),
        }
    }
}

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 string (an optional `>>graph6<<` header is skipped).
/// Padding bits must be zero so that emitting reproduces the input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[start..];
    let end = bytes.iter().position(|&b| b == b'\n' || b == b'\r').unwrap_or(bytes.len());
    if bytes[end..].iter().any(|&b| !b.is_ascii_whitespace()) {
        return Err(parse_err(start + end, "trailing data after graph6 string"));
    }
    let bytes = &bytes[..end];
    let digit = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
            Some(&b) => Err(parse_err(start + i, format!("byte {b:#04x} is outside the graph6 range 63..=126"))),
            None => Err(parse_err(start + i, "unexpected end of graph6 string")),
        }
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(start, "empty graph6 string")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(start + 1, "graphs with more than 258047 vertices are not supported"));
            }
            let n = (digit(1)? << 12 | digit(2)? << 6 | digit(3)?) as usize;
            if n < 63 {
                return Err(parse_err(start, format!("vertex count {n} must use the one-byte form")));
            }
            (n, 4)
        }
        Some(_) => (digit(0)? as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    for i in pos..bytes.len() {
        digit(i)?;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() != pos + needed {
        return Err(parse_err(
            start + bytes.len().min(pos + needed),
            format!("expected {needed} adjacency bytes for {n} vertices, found {}", bytes.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut word = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                word = digit(pos)?;
                pos += 1;
            }
            if word >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && word & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(start + pos - 1, "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut word = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push((word + 63) as char);
                word = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((word << (6 - k)) + 63) as char);
    }
    out
}

/// Parses the edge-list format.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |offset, line| {
            let at = *offset;
            *offset += line.len();
            Some((at, line.trim_end_matches(['\n', '\r'])))
        })
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let pair = |at: usize, line: &str| -> Result<(usize, usize)> {
        let mut fields = line.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let f = fields.next().ok_or_else(|| parse_err(at, format!("missing {what}")))?;
            let col = f.as_ptr() as usize - line.as_ptr() as usize;
            f.parse().map_err(|_| parse_err(at + col, format!("`{f}` is not a non-negative integer")))
        };
        let x = next("first field")?;
        let y = next("second field")?;
        if let Some(extra) = fields.next() {
            let col = extra.as_ptr() as usize - line.as_ptr() as usize;
            return Err(parse_err(at + col, "unexpected third field"));
        }
        Ok((x, y))
    };
    let (at, header) = lines.next().ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let (n, m) = pair(at, header)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g_edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (at, line) in lines.by_ref() {
        if g_edges.len() == m {
            return Err(parse_err(at, format!("more than the {m} edges announced")));
        }
        let (u, v) = pair(at, line)?;
        if u >= n || v >= n {
            return Err(parse_err(at, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(at, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(at, format!("duplicate edge {u} {v}")));
        }
        g_edges.push((u, v));
    }
    if g_edges.len() != m {
        return Err(parse_err(text.len(), format!("found {} edges, header announced {m}", g_edges.len())));
    }
    Graph::from_edges(n, g_edges)
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => emit_graph6(g),
        Format::Edgelist => emit_edgelist(g),
    }
}

/// Every graph in `text`: one graph6 string per nonempty line, or a single
/// edge list. Offsets in errors refer to the whole text.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Edgelist => Ok(vec![parse_edgelist(text)?]),
        Format::Graph6 => {
            let mut out = Vec::new();
            let mut offset = 0;
            for line in text.split_inclusive('\n') {
                let body = line.trim_end_matches(['\n', '\r']);
                if !body.trim().is_empty() {
                    out.push(parse_graph6(body).map_err(|e| shift(e, offset))?);
                }
                offset += line.len();
            }
            Ok(out)
        }
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        other => other,
    }
}
