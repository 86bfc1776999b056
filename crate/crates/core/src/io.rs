//! The `.poly` text format.
//!
//! ```text
//! # comment lines start with '#'
//! n k
//! x_11 x_12 … x_1n
//! …
//! x_k1 x_k2 … x_kn
//! ```
//!
//! Entries are integers or fractions `p/q`. Blank lines and `#` lines are
//! ignored anywhere. Serialization writes the vertices in canonical
//! (lexicographic) order with reduced fractions, so a parse/serialize round
//! trip is the identity on serialized text.

use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::{format_scalar, parse_scalar, RatVector};
use crate::polytope::{enumerate_facets, Polytope};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..len];
        let col = line[..offset].chars().count() + 1;
        rest = &rest[len..];
        offset += len;
        Some((col, tok))
    })
}

/// The dimension and point list of a `.poly` text.
pub fn parse_points(text: &str) -> Result<(usize, Vec<RatVector>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let Some((hline, header)) = lines.next() else {
        return Err(parse_error(1, 1, "missing header `n k`"));
    };
    let head: Vec<(usize, &str)> = tokens(header).collect();
    if head.len() != 2 {
        return Err(parse_error(hline, 1, "header must be `n k`"));
    }
    let field = |(col, tok): (usize, &str), what: &str| {
        tok.parse::<usize>()
            .map_err(|_| parse_error(hline, col, format!("invalid {what} `{tok}`")))
    };
    let n = field(head[0], "dimension")?;
    let k = field(head[1], "point count")?;
    if n == 0 {
        return Err(parse_error(hline, head[0].0, "dimension must be positive"));
    }

    let mut points = Vec::with_capacity(k);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if points.len() == k {
            return Err(parse_error(lineno, 1, format!("more than {k} points")));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens(line) {
            row.push(parse_scalar(tok).map_err(|m| parse_error(lineno, col, m))?);
        }
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        points.push(row);
    }
    if points.len() != k {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("expected {k} points, found {}", points.len()),
        ));
    }
    Ok((n, points))
}

/// Convex hull of the listed points.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let (_, points) = parse_points(text)?;
    enumerate_facets(&points)
}

pub fn serialize_points(n: usize, points: &[RatVector]) -> String {
    let mut out = format!("{n} {}\n", points.len());
    for p in points {
        let row: Vec<String> = p.iter().map(format_scalar).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Header and canonically ordered vertices.
pub fn serialize_polytope(p: &Polytope) -> String {
    serialize_points(p.dim(), p.vertices())
}

pub fn read_polytope_file(path: &Path) -> Result<Polytope> {
    parse_polytope(&read_text(path)?)
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
