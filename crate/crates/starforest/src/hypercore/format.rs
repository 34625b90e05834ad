//! Plain-text hypergraph format.
//!
//! Line 1 is the header `n r` (or `n *` for mixed-size multi-hypergraphs).
//! Every following non-comment line is one edge: strictly increasing 0-based
//! vertex indices separated by single spaces. Lines starting with `#` are
//! comments. Edges must appear in lexicographic order (duplicates are
//! allowed only in the multi format) and the file ends with a newline.
//! Writing then parsing is the identity, and so is parsing then writing on
//! normalized text.

use super::{CoreError, Hypergraph, MultiHypergraph};
use std::fmt::Write as _;

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.r());
    write_edges(&mut out, h.edges());
    out
}

pub fn write_multi_hypergraph(m: &MultiHypergraph) -> String {
    let mut out = format!("{} *\n", m.n());
    write_edges(&mut out, m.edges());
    out
}

fn write_edges(out: &mut String, edges: &[Vec<usize>]) {
    for e in edges {
        for (i, v) in e.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, CoreError> {
    let (n, r_token, body) = split_header(text)?;
    let r: usize = r_token.parse().map_err(|_| CoreError::Parse {
        line: 1,
        message: format!("malformed header: bad uniformity {r_token:?}"),
    })?;
    let edges = parse_edges(n, body, false)?;
    for (line, e) in &edges {
        if e.len() != r {
            return Err(CoreError::Parse {
                line: *line,
                message: format!("edge has {} vertices, expected {}", e.len(), r),
            });
        }
    }
    let edges: Vec<Vec<usize>> = edges.into_iter().map(|(_, e)| e).collect();
    Hypergraph::new(n, r, edges)
}

pub fn parse_multi_hypergraph(text: &str) -> Result<MultiHypergraph, CoreError> {
    let (n, r_token, body) = split_header(text)?;
    if r_token != "*" {
        return Err(CoreError::Parse {
            line: 1,
            message: format!("expected `*` uniformity marker, found {r_token:?}"),
        });
    }
    let edges = parse_edges(n, body, true)?;
    MultiHypergraph::new(n, edges.into_iter().map(|(_, e)| e).collect())
}

/// Returns `(n, uniformity token, remaining lines)`.
fn split_header(text: &str) -> Result<(usize, &str, &str), CoreError> {
    let header_err = |message: String| CoreError::Parse { line: 1, message };
    if !text.ends_with('\n') {
        return Err(header_err("missing trailing newline".into()));
    }
    let Some((first, rest)) = text.split_once('\n') else {
        return Err(header_err("missing header line".into()));
    };
    let mut tokens = first.split(' ');
    let (Some(n), Some(r), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(header_err(format!("malformed header {first:?}")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| header_err(format!("malformed header: bad vertex count {n:?}")))?;
    Ok((n, r, rest))
}

/// Parses edge lines, enforcing strictly increasing vertices per line and
/// lexicographic line order. Returns `(line number, edge)` pairs.
fn parse_edges(
    n: usize,
    body: &str,
    allow_duplicates: bool,
) -> Result<Vec<(usize, Vec<usize>)>, CoreError> {
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, raw) in body.split('\n').enumerate() {
        let line = i + 2;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut edge = Vec::new();
        for token in raw.split(' ') {
            let v: usize = token.parse().map_err(|_| CoreError::Parse {
                line,
                message: format!("bad vertex token {token:?}"),
            })?;
            if v >= n {
                return Err(CoreError::Parse {
                    line,
                    message: format!("vertex {v} out of range (n = {n})"),
                });
            }
            if let Some(&last) = edge.last() {
                if v == last {
                    return Err(CoreError::Parse {
                        line,
                        message: format!("repeated vertex {v} in edge"),
                    });
                }
                if v < last {
                    return Err(CoreError::Parse {
                        line,
                        message: "vertices not strictly increasing".into(),
                    });
                }
            }
            edge.push(v);
        }
        if let Some((prev_line, prev)) = edges.last() {
            if *prev > edge {
                return Err(CoreError::Parse {
                    line,
                    message: "edges not in lexicographic order".into(),
                });
            }
            if *prev == edge && !allow_duplicates {
                return Err(CoreError::Parse {
                    line,
                    message: format!("duplicate of edge on line {prev_line}"),
                });
            }
        }
        edges.push((line, edge));
    }
    Ok(edges)
}
