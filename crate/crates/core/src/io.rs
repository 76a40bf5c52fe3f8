//! Text formats.
//!
//! Graph edge list: first line `n m`, then `m` lines `u v` (`1 ≤ u < v ≤ n`).
//! Output lists each edge once in ascending lexicographic order; input accepts
//! either endpoint order.
//!
//! Coloring: `n` lines `v c`, every vertex `1..=n` exactly once, `c ≥ 1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::error::{FormatError, FormatErrorKind};
use crate::graph::Graph;

fn err(line: usize, kind: FormatErrorKind) -> FormatError {
    FormatError { line, kind }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(err(1, FormatErrorKind::Empty))?;
    let (n, m) = parse_pair(header).ok_or(err(header_line, FormatErrorKind::MalformedHeader))?;
    if n == 0 {
        return Err(err(header_line, FormatErrorKind::MalformedHeader));
    }
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        let (u, v) = parse_pair(body).ok_or(err(line, FormatErrorKind::MalformedLine))?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(err(
                    line,
                    FormatErrorKind::VertexOutOfRange { vertex: w, n },
                ));
            }
        }
        if u == v {
            return Err(err(line, FormatErrorKind::SelfLoop(u)));
        }
        let edge = (u.min(v), u.max(v));
        if !seen.insert(edge) {
            return Err(err(line, FormatErrorKind::DuplicateEdge(edge.0, edge.1)));
        }
    }
    if seen.len() != m {
        return Err(err(
            last_line,
            FormatErrorKind::EdgeCountMismatch {
                declared: m,
                found: seen.len(),
            },
        ));
    }
    Ok(Graph::from_edges(n, seen).expect("edges validated above"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut entries: Vec<(usize, usize, Color)> = Vec::new();
    for (line, body) in content_lines(text) {
        let (v, c) = parse_pair(body).ok_or(err(line, FormatErrorKind::MalformedLine))?;
        if c == 0 {
            return Err(err(line, FormatErrorKind::ZeroColor));
        }
        let c = Color::try_from(c).map_err(|_| err(line, FormatErrorKind::MalformedLine))?;
        entries.push((line, v, c));
    }
    if entries.is_empty() {
        return Err(err(1, FormatErrorKind::Empty));
    }
    let n = entries.len();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for &(line, v, c) in &entries {
        if v == 0 || v > n {
            return Err(err(
                line,
                FormatErrorKind::VertexOutOfRange { vertex: v, n },
            ));
        }
        if colors[v - 1].replace(c).is_some() {
            return Err(err(line, FormatErrorKind::DuplicateVertex(v)));
        }
    }
    // n entries, no duplicates, all in 1..=n: every slot is filled.
    let colors = colors.into_iter().map(Option::unwrap).collect();
    Ok(Coloring::new(colors).expect("colors are positive and non-empty"))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (i, col) in c.as_slice().iter().enumerate() {
        writeln!(out, "{} {col}", i + 1).unwrap();
    }
    out
}
