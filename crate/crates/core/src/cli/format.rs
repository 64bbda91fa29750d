//! Text formats.
//!
//! `.uhg`: the first content line is `n r m`, followed by `m` lines of `r`
//! vertex indices. `.g`: `n m`, then `m` lines `u v`. Blank lines and lines
//! starting with `#` are skipped in both. Emitted files list edges sorted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str, expected: usize) -> Result<Vec<usize>> {
    let nums = s
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    if nums.len() != expected {
        return Err(Error::parse(
            line,
            format!("expected {expected} numbers, found {}", nums.len()),
        ));
    }
    Ok(nums)
}

fn body<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    m: usize,
    width: usize,
    mut add: impl FnMut(usize, &[usize]) -> Result<()>,
) -> Result<()> {
    let mut last = 1;
    for k in 0..m {
        let (line, s) = lines.next().ok_or_else(|| {
            Error::parse(last, format!("header announces {m} edges, found {k}"))
        })?;
        last = line;
        add(line, &numbers(line, s, width)?)?;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, format!("more than the announced {m} edges")));
    }
    Ok(())
}

pub fn parse_uhg(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n r m` header"))?;
    let [n, r, m] = numbers(line, header, 3)?[..] else {
        unreachable!("three numbers checked")
    };
    if r == 0 {
        return Err(Error::parse(line, "uniformity must be at least 1"));
    }
    let mut h = Hypergraph::new(n, r)?;
    body(&mut lines, m, r, |line, e| {
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
        }
        match h.insert(e) {
            Ok(true) => Ok(()),
            Ok(false) => Err(Error::parse(line, format!("duplicate hyperedge {e:?}"))),
            Err(err) => Err(Error::parse(line, err.to_string())),
        }
    })?;
    Ok(h)
}

pub fn emit_uhg(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.vertex_count(), h.uniformity(), h.edge_count());
    for e in h.edges() {
        let line = e.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "{line}").expect("writing to a string");
    }
    out
}

pub fn parse_g(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let [n, m] = numbers(line, header, 2)?[..] else {
        unreachable!("two numbers checked")
    };
    let mut g = Graph::new(n);
    body(&mut lines, m, 2, |line, e| {
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
        }
        match g.add_edge(e[0], e[1]) {
            Ok(true) => Ok(()),
            Ok(false) => Err(Error::parse(line, format!("duplicate edge {} {}", e[0], e[1]))),
            Err(err) => Err(Error::parse(line, err.to_string())),
        }
    })?;
    Ok(g)
}

pub fn emit_g(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for p in g.edges() {
        writeln!(out, "{} {}", p.u(), p.v()).expect("writing to a string");
    }
    out
}
