//! The `arc v1` coloring text format.
//!
//! ```text
//! arc v1
//! n=5 s=3 c=2
//! 0 1 2 : 0
//! 0 1 3 : 1
//! ...
//! ```
//!
//! One line per edge; every edge of the host appears exactly once and the
//! colors used are exactly `0..c`. The writer emits edges in colex order.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{Coloring, HostGraph};

pub const ARC_HEADER: &str = "arc v1";

pub fn write_arc(coloring: &Coloring) -> String {
    let host = coloring.host();
    let mut out = String::new();
    let _ = writeln!(out, "{ARC_HEADER}");
    let _ = writeln!(out, "n={} s={} c={}", host.n(), host.s(), coloring.num_colors());
    for (rank, e) in host.edges().enumerate() {
        for (i, v) in e.vertices().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        let _ = writeln!(out, " : {}", coloring.color_of_rank(rank));
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header_field(token: Option<&str>, key: &str, line: usize) -> Result<u32> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing `{key}=`")))?;
    let value = token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| parse_err(line, format!("expected `{key}=<int>`, found `{token}`")))?;
    value
        .parse()
        .map_err(|_| parse_err(line, format!("`{value}` is not a nonnegative integer")))
}

pub fn parse_arc(text: &str) -> Result<Coloring> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    match lines.next() {
        Some((_, l)) if l == ARC_HEADER => {}
        Some((i, l)) => return Err(parse_err(i, format!("expected `{ARC_HEADER}`, found `{l}`"))),
        None => return Err(parse_err(1, "empty input")),
    }

    let (hline, header) = lines.next().ok_or_else(|| parse_err(2, "missing size line"))?;
    let mut tokens = header.split_whitespace();
    let n = parse_header_field(tokens.next(), "n", hline)?;
    let s = parse_header_field(tokens.next(), "s", hline)?;
    let c = parse_header_field(tokens.next(), "c", hline)?;
    if let Some(extra) = tokens.next() {
        return Err(parse_err(hline, format!("unexpected `{extra}`")));
    }
    let host = HostGraph::new(n, s).map_err(|e| parse_err(hline, e.to_string()))?;
    let m = host.materialized_edge_count().map_err(|e| parse_err(hline, e.to_string()))?;

    let mut colors: Vec<Option<u32>> = vec![None; m];
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if line.is_empty() {
            continue;
        }
        let (verts, color) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, "expected `<vertices> : <color>`"))?;
        let vs: Vec<u32> = verts
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(lineno, format!("bad vertex `{t}`"))))
            .collect::<Result<_>>()?;
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(lineno, "vertices must be strictly ascending"));
        }
        let e = host.edge(vs).map_err(|e| parse_err(lineno, e.to_string()))?;
        let color: u32 = color
            .trim()
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad color `{}`", color.trim())))?;
        if color >= c {
            return Err(parse_err(lineno, format!("color {color} outside 0..{c}")));
        }
        let rank = host.edge_rank(&e)? as usize;
        if colors[rank].is_some() {
            return Err(parse_err(lineno, format!("edge {e} listed twice")));
        }
        colors[rank] = Some(color);
    }

    if let Some(rank) = colors.iter().position(Option::is_none) {
        let missing = host.edge_unrank(rank as u64)?;
        return Err(parse_err(last_line, format!("edge {missing} is missing")));
    }
    let colors: Vec<u32> = colors.into_iter().map(|c| c.expect("checked above")).collect();
    let coloring = Coloring::new(host, colors).map_err(|e| parse_err(hline, e.to_string()))?;
    if coloring.num_colors() != c {
        return Err(parse_err(hline, format!("header declares c={c} but {} colors are used", coloring.num_colors())));
    }
    Ok(coloring)
}
