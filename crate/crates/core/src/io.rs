//! Edge-list and DIMACS `.col` text formats.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` with 0-based
//! endpoints. DIMACS: `c` comment lines, one `p edge n m` line and `e u v`
//! lines with 1-based endpoints, shifted to 0-based on read.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

fn build_at(line: usize, n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    Graph::new(n, edges).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let mut tokens = header.split_whitespace();
    let n = parse_usize(tokens.next(), header_line, "vertex count")?;
    let m = parse_usize(tokens.next(), header_line, "edge count")?;
    if tokens.next().is_some() {
        return Err(Error::parse(header_line, "unexpected token after `n m`"));
    }
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let u = parse_usize(tokens.next(), line, "endpoint")?;
        let v = parse_usize(tokens.next(), line, "endpoint")?;
        if tokens.next().is_some() {
            return Err(Error::parse(line, "expected exactly two endpoints"));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        // Validate per line so diagnostics point at the offending edge.
        build_at(line, n, vec![(u, v)])?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    build_at(header_line, n, edges)
}

/// Canonical edge list: header then edges sorted with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line,
                            format!("expected `p edge`, found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                n = Some(parse_usize(tokens.next(), line, "vertex count")?);
                // The declared edge count is advisory; DIMACS files in the
                // wild often list both orientations.
                parse_usize(tokens.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| Error::parse(line, "edge before problem line"))?;
                let u = parse_usize(tokens.next(), line, "endpoint")?;
                let v = parse_usize(tokens.next(), line, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(Error::parse(
                            line,
                            format!("endpoint {w} outside 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::parse(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(1, "missing `p edge n m` line"))?;
    build_at(1, n, edges)
}

/// DIMACS output with ids shifted back to 1-based.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
