//! Edge-list text format and the column-matrix layout for vertex lists.
//!
//! ```text
//! # comment
//! graph 3
//! 0 1
//! 1 2
//! ```
//!
//! Bipartite graphs use a `bigraph m n` header and `left right` edge lines.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{BiEnumerator, BipartiteGraph, Graph};

/// A parsed edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a nonnegative integer, found {tok:?}"),
        )
    })
}

pub fn parse_edge_list(text: &str) -> Result<AnyGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing header line"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let bipartite = match head.as_slice() {
        ["graph", _] => false,
        ["bigraph", _, _] => true,
        _ => {
            return Err(parse_err(
                hline,
                format!("expected \"graph n\" or \"bigraph m n\", found {header:?}"),
            ))
        }
    };

    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(parse_err(
                line,
                format!("expected two indices, found {l:?}"),
            ));
        };
        edges.push((parse_usize(a, line)?, parse_usize(b, line)?));
    }

    let wrap = |e: Error| match e {
        Error::Parse { .. } => e,
        other => parse_err(hline, other.to_string()),
    };
    if bipartite {
        let m = parse_usize(head[1], hline)?;
        let n = parse_usize(head[2], hline)?;
        BipartiteGraph::new(m, n, edges)
            .map(AnyGraph::Bipartite)
            .map_err(wrap)
    } else {
        let n = parse_usize(head[1], hline)?;
        Graph::new(n, edges).map(AnyGraph::Graph).map_err(wrap)
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("bigraph {} {}\n", g.left_count(), g.right_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One row per coordinate, one right-aligned column per point.
pub fn format_matrix(columns: &[Vec<i64>]) -> String {
    let rows = columns.first().map_or(0, Vec::len);
    let width = columns
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for r in 0..rows {
        push_row(&mut out, columns.iter().map(|c| c[r].to_string()), width);
    }
    out
}

fn push_row(out: &mut String, cells: impl Iterator<Item = String>, width: usize) {
    let line: Vec<String> = cells.map(|c| format!("{c:>width$}")).collect();
    out.push_str(&line.join(" "));
    out.push('\n');
}

/// The `a` block, a separator row, then the `c` block. The separator is a
/// row of dashes, or `⊕` per column when `unicode` is set.
pub fn format_bi_matrix(columns: &[BiEnumerator], unicode: bool) -> String {
    let left: Vec<Vec<i64>> = columns.iter().map(|b| b.left.clone()).collect();
    let right: Vec<Vec<i64>> = columns.iter().map(|b| b.right.clone()).collect();
    let width = columns
        .iter()
        .flat_map(|b| b.flatten())
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for r in 0..left.first().map_or(0, Vec::len) {
        push_row(&mut out, left.iter().map(|c| c[r].to_string()), width);
    }
    if unicode {
        push_row(&mut out, columns.iter().map(|_| "⊕".to_string()), width);
    } else {
        let total = columns.len() * (width + 1);
        out.push_str(&"-".repeat(total.saturating_sub(1)));
        out.push('\n');
    }
    for r in 0..right.first().map_or(0, Vec::len) {
        push_row(&mut out, right.iter().map(|c| c[r].to_string()), width);
    }
    out
}

/// Reads a matrix produced by [`format_matrix`] or [`format_bi_matrix`]
/// back into flattened columns. Separator rows are skipped.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.chars().all(|c| c == '-' || c == '⊕' || c.is_whitespace()) {
            continue;
        }
        let row = l
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(idx + 1, format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_err(idx + 1, "ragged matrix row"));
            }
        }
        rows.push(row);
    }
    let cols = rows.first().map_or(0, Vec::len);
    Ok((0..cols)
        .map(|c| rows.iter().map(|r| r[c]).collect())
        .collect())
}
