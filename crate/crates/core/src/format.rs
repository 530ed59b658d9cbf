//! Line-based text formats.
//!
//! ```text
//! digraph <n> <m>          coloring <m> <c>
//! <tail> <head>            <tail> <head> <color>
//! ...                      ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Digraph arc order
//! defines arc indices; coloring lines may come in any order and are matched
//! to arcs by their endpoints.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::verify::ArcColoring;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::Parse {
            line,
            message: format!("expected {N} fields, found {}", fields.len()),
        });
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

fn parse_header(line: usize, text: &str, keyword: &str) -> Result<[usize; 2]> {
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("expected header `{keyword} <a> <b>`"),
        })?;
    parse_fields::<2>(line, rest)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let [n, m] = parse_header(hline, header, "digraph")?;
    let mut arcs = Vec::with_capacity(m);
    for (line, text) in lines {
        let [t, h] = parse_fields::<2>(line, text)?;
        arcs.push((t, h));
    }
    if arcs.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header declares {m} arcs, found {}", arcs.len()),
        });
    }
    Digraph::new(n, arcs)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", d.vertex_count(), d.arc_count());
    for &(t, h) in d.arcs() {
        writeln!(out, "{t} {h}").unwrap();
    }
    out
}

/// Parses a coloring and aligns it with the arc indices of `d`.
pub fn parse_coloring(text: &str, d: &Digraph) -> Result<ArcColoring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let [m, c] = parse_header(hline, header, "coloring")?;
    if m != d.arc_count() {
        return Err(Error::InvalidColoring(format!(
            "coloring declares {m} arcs, digraph has {}",
            d.arc_count()
        )));
    }
    let mut colors = vec![0u32; m];
    let mut count = 0;
    for (line, text) in lines {
        let [t, h, col] = parse_fields::<3>(line, text)?;
        let arc = d.arc_index(t, h).ok_or_else(|| Error::Parse {
            line,
            message: format!("{t} -> {h} is not an arc of the digraph"),
        })?;
        if colors[arc] != 0 {
            return Err(Error::Parse {
                line,
                message: format!("arc {t} -> {h} colored twice"),
            });
        }
        if col == 0 || col > c {
            return Err(Error::Parse {
                line,
                message: format!("color {col} outside 1..={c}"),
            });
        }
        colors[arc] = col as u32;
        count += 1;
    }
    if count != m {
        return Err(Error::InvalidColoring(format!(
            "header declares {m} arcs, found {count}"
        )));
    }
    ArcColoring::new(colors, c)
}

pub fn write_coloring(d: &Digraph, col: &ArcColoring) -> String {
    let mut out = format!("coloring {} {}\n", col.arc_count(), col.num_colors());
    for (&(t, h), c) in d.arcs().iter().zip(col.colors()) {
        writeln!(out, "{t} {h} {c}").unwrap();
    }
    out
}
