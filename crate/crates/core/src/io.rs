//! File formats: graph6 for graphs and a line-oriented text format for
//! colorings.
//!
//! graph6 is the standard header-free bit-packed encoding: one size byte
//! `n + 63` (for `n <= 62`), then the upper triangle in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian six bits per byte,
//! each offset by 63.
//!
//! Colorings serialize as UTF-8 text: a first line `n=<int> k=<int>`, then
//! one line `<u> <v> <color>` per host edge with `u < v`, ascending by edge
//! index.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Encodes a graph in graph6.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    debug_assert!(n <= 62, "graph6 short form needs n <= 62");
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n as u32 {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push((value + 63) as char);
    }
    out
}

/// Decodes a graph6 string (short form, `n <= 62`).
pub fn from_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::InvalidGraph("empty graph6 string".into()));
    }
    let size = bytes[0];
    if size == 126 {
        return Err(Error::TooManyVertices {
            n: 63,
            limit: MAX_VERTICES,
        });
    }
    if !(63..=125).contains(&size) {
        return Err(Error::InvalidGraph(format!(
            "invalid graph6 size byte {size}"
        )));
    }
    let n = (size - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let body = &bytes[1..];
    let needed = bit_count.div_ceil(6);
    if body.len() < needed {
        return Err(Error::InvalidGraph(format!(
            "graph6 body too short: {} bytes, expected {needed}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    'outer: for v in 1..n as u32 {
        for u in 0..v {
            if pos >= bit_count {
                break 'outer;
            }
            let byte = body[pos / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::InvalidGraph(format!(
                    "invalid graph6 body byte {byte}"
                )));
            }
            let bit = (byte - 63) >> (5 - (pos % 6)) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    SimpleGraph::from_edges(n, &edges)
}

/// Writes a coloring in the text format.
pub fn coloring_to_text(c: &EdgeColoring) -> String {
    let mut out = format!("n={} k={}\n", c.host().n(), c.color_count());
    for ((u, v), color) in c.host().edges().zip(c.colors()) {
        out.push_str(&format!("{u} {v} {color}\n"));
    }
    out
}

/// Parses the text format. The host is the listed edge set on `n` vertices;
/// colors are normalized on load.
pub fn coloring_from_text(text: &str) -> Result<EdgeColoring> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidColoring("empty coloring file".into()))?;
    let (n_part, k_part) = header
        .split_once(' ')
        .ok_or_else(|| Error::InvalidColoring(format!("bad header: {header:?}")))?;
    let n: usize = n_part
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::InvalidColoring(format!("bad header: {header:?}")))?;
    let k: usize = k_part
        .strip_prefix("k=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::InvalidColoring(format!("bad header: {header:?}")))?;

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut colors: Vec<u32> = Vec::new();
    let mut last_index: Option<usize> = None;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v, color) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), Some(c), None) => {
                let u: u32 = u
                    .parse()
                    .map_err(|_| Error::InvalidColoring(format!("bad line: {line:?}")))?;
                let v: u32 = v
                    .parse()
                    .map_err(|_| Error::InvalidColoring(format!("bad line: {line:?}")))?;
                let c: u32 = c
                    .parse()
                    .map_err(|_| Error::InvalidColoring(format!("bad line: {line:?}")))?;
                (u, v, c)
            }
            _ => return Err(Error::InvalidColoring(format!("bad line: {line:?}"))),
        };
        if u >= v {
            return Err(Error::InvalidColoring(format!(
                "edge ({u}, {v}) not in u < v order"
            )));
        }
        if v as usize >= n {
            return Err(Error::InvalidColoring(format!(
                "endpoint {v} out of range for n={n}"
            )));
        }
        let idx = crate::graph::edge_index(n, u, v);
        if let Some(prev) = last_index {
            if idx <= prev {
                return Err(Error::InvalidColoring(
                    "edges not sorted by edge index".into(),
                ));
            }
        }
        last_index = Some(idx);
        edges.push((u, v));
        colors.push(color);
    }
    let host = SimpleGraph::from_edges(n, &edges)?;
    let coloring = EdgeColoring::new(host, colors)?;
    if coloring.color_count() as usize != k {
        return Err(Error::InvalidColoring(format!(
            "header claims k={k}, edges use {} colors",
            coloring.color_count()
        )));
    }
    Ok(coloring)
}
