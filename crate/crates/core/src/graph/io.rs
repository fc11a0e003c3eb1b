//! graph6 and plain edge-list text formats.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encode as graph6: `n + 63`, then the upper triangle column by column,
/// packed 6 bits per byte big-endian with offset 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\r', '\n']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Parse("empty graph6 string".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::Parse(format!("bad graph6 size byte {first:#x}")));
    }
    if first == 126 {
        return Err(Error::Parse("graph6 with more than 62 vertices".into()));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > super::MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let m = n * (n - 1) / 2;
    let body = &bytes[1..];
    if body.len() != m.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            m.div_ceil(6)
        )));
    }
    let mut bitstream = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("bad graph6 byte {b:#x}")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bitstream.push((v >> k) & 1 == 1);
        }
    }
    if bitstream[m..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero graph6 padding".into()));
    }
    let mut adj = vec![0u32; n];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bitstream[pos] {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// `n` on the first line, then one 1-based `i j` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?
        .parse()
        .map_err(|_| Error::Parse("edge list must start with the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) if i >= 1 && j >= 1 => edges.push((i - 1, j - 1)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::from_edges(n, &edges)
}

/// Read one or more graphs: an edge list if the first meaningful line starts
/// with a digit, otherwise one graph6 string per line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(Error::Parse("no graph in input".into())),
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => Ok(vec![from_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(from_graph6)
            .collect(),
    }
}
