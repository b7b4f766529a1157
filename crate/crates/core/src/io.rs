//! graph6, sparse6 (read only) and the `cubicmg` multigraph text format.
//!
//! `cubicmg` is a header line `cubicmg <n> <m>` followed by `m` lines
//! `<u> <v>` with 0-indexed endpoints. Edge ids follow line order.

use crate::graph::{CubicGraph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

fn perr(msg: impl Into<String>) -> GraphError {
    GraphError::Parse(msg.into())
}

/// Parses exactly one graph in any supported format.
pub fn parse_graph(text: &str) -> Result<CubicGraph, GraphError> {
    let mut records = parse_graphs(text);
    match records.len() {
        0 => Err(perr("empty input")),
        1 => records.pop().unwrap().result,
        k => Err(perr(format!("expected one graph, found {k} records"))),
    }
}

/// One record of a multi-graph input.
#[derive(Debug, Clone)]
pub struct GraphRecord {
    /// 1-based line where the record starts.
    pub line: usize,
    pub text: String,
    pub result: Result<CubicGraph, GraphError>,
}

/// Splits `text` into records (one graph6/sparse6 string per line, or a
/// `cubicmg` block) and parses each independently. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graphs(text: &str) -> Vec<GraphRecord> {
    let lines: Vec<&str> = text.lines().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i].trim();
        if line.is_empty() || line.starts_with('#') {
            i += 1;
            continue;
        }
        if line.starts_with("cubicmg") {
            let start = i;
            let m = line.split_whitespace().nth(2).and_then(|t| t.parse::<usize>().ok());
            let mut body = vec![line];
            i += 1;
            if let Some(m) = m {
                while body.len() <= m && i < lines.len() {
                    let l = lines[i].trim();
                    i += 1;
                    if l.is_empty() || l.starts_with('#') {
                        continue;
                    }
                    body.push(l);
                }
            }
            let text = body.join("\n");
            out.push(GraphRecord { line: start + 1, result: parse_cubicmg(&text), text });
        } else {
            let result = if line.starts_with(':') || line.starts_with(SPARSE6_HEADER) {
                parse_sparse6(line)
            } else {
                parse_graph6(line)
            };
            out.push(GraphRecord { line: i + 1, text: line.to_string(), result });
            i += 1;
        }
    }
    out
}

fn decode_size(data: &[u8]) -> Result<(usize, usize), GraphError> {
    let get = |i: usize| -> Result<usize, GraphError> {
        let c = *data.get(i).ok_or_else(|| perr("truncated size field"))?;
        if !(63..=126).contains(&c) {
            return Err(perr(format!("invalid character {:?}", c as char)));
        }
        Ok((c - 63) as usize)
    };
    let first = get(0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if get(1)? < 63 {
        let n = (get(1)? << 12) | (get(2)? << 6) | get(3)?;
        return Ok((n, 4));
    }
    let mut n = 0;
    for i in 2..8 {
        n = (n << 6) | get(i)?;
    }
    Ok((n, 8))
}

fn encode_size(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 1 << 18 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn sixes(data: &[u8]) -> Result<Vec<u8>, GraphError> {
    data.iter()
        .map(|&c| {
            if (63..=126).contains(&c) {
                Ok(c - 63)
            } else {
                Err(perr(format!("invalid character {:?}", c as char)))
            }
        })
        .collect()
}

pub fn parse_graph6(text: &str) -> Result<CubicGraph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (n, off) = decode_size(bytes)?;
    let body = sixes(&bytes[off..])?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(perr(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            bits_needed.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    CubicGraph::new(n, edges)
}

pub fn parse_sparse6(text: &str) -> Result<CubicGraph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(SPARSE6_HEADER).unwrap_or(s);
    let s = s.strip_prefix(':').ok_or_else(|| perr("sparse6 must start with ':'"))?;
    let bytes = s.as_bytes();
    let (n, off) = decode_size(bytes)?;
    let data = sixes(&bytes[off..])?;
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    let total_bits = data.len() * 6;
    let bit = |i: usize| (data[i / 6] >> (5 - i % 6)) & 1;
    let mut pos = 0;
    let mut v = 0usize;
    let mut edges = Vec::new();
    while pos + 1 + k <= total_bits {
        let b = bit(pos);
        pos += 1;
        let mut x = 0usize;
        for _ in 0..k {
            x = (x << 1) | bit(pos) as usize;
            pos += 1;
        }
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        } else if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    CubicGraph::new(n, edges)
}

pub fn parse_cubicmg(text: &str) -> Result<CubicGraph, GraphError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| perr("missing cubicmg header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "cubicmg" {
        return Err(perr(format!("bad header {header:?}")));
    }
    let num = |t: &str| t.parse::<usize>().map_err(|_| perr(format!("bad integer {t:?}")));
    let n = num(fields[1])?;
    let m = num(fields[2])?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 2 {
            return Err(perr(format!("bad edge line {line:?}")));
        }
        edges.push((num(f[0])?, num(f[1])?));
    }
    if edges.len() != m {
        return Err(perr(format!("expected {m} edge lines, found {}", edges.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(perr(format!("trailing line {extra:?}")));
    }
    CubicGraph::new(n, edges)
}

/// graph6 text without a header or newline, or `None` for a multigraph.
pub fn to_graph6(g: &CubicGraph) -> Option<String> {
    if !g.is_simple() {
        return None;
    }
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; total.div_ceil(6) * 6];
    for (_, u, v) in g.edges() {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        bits[j * (j - 1) / 2 + i] = 1;
    }
    for chunk in bits.chunks(6) {
        let val = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b);
        out.push((val + 63) as char);
    }
    Some(out)
}

pub fn to_cubicmg(g: &CubicGraph) -> String {
    let mut out = format!("cubicmg {} {}\n", g.n(), g.edge_count());
    for (_, u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// graph6 for simple graphs, `cubicmg` otherwise; always newline terminated.
pub fn serialize_graph(g: &CubicGraph) -> String {
    match to_graph6(g) {
        Some(s) => s + "\n",
        None => to_cubicmg(g),
    }
}
