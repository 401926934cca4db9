//! Line-oriented polyhedron files.
//!
//! ```text
//! # comment
//! v 8
//! f r 1 2 3 4
//! f 5 6 7 8
//! ```
//!
//! `v` comes first and exactly once. Each `f` line lists one face in cyclic
//! order (1-based), optionally preceded by a color `r`, `g` or `b`.

use std::fmt::Write;

use super::{Color, Face, Polyhedron};
use crate::error::{Error, Result};

pub(super) fn parse(text: &str) -> Result<Polyhedron> {
    let err = |line: usize, message: String| Error::PolyFormat { line, message };
    let mut n_vertices: Option<usize> = None;
    let mut faces = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                if n_vertices.is_some() {
                    return Err(err(line_no, "duplicate 'v' statement".into()));
                }
                let count = tokens
                    .next()
                    .ok_or_else(|| err(line_no, "missing vertex count".into()))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| err(line_no, format!("bad vertex count {count:?}")))?;
                if let Some(extra) = tokens.next() {
                    return Err(err(line_no, format!("unexpected {extra:?}")));
                }
                n_vertices = Some(count);
            }
            Some("f") => {
                if n_vertices.is_none() {
                    return Err(err(line_no, "'f' before 'v'".into()));
                }
                let mut color = None;
                let mut vertices = Vec::new();
                for (i, tok) in tokens.enumerate() {
                    if i == 0 {
                        let mut chars = tok.chars();
                        if let (Some(c), None) = (chars.next(), chars.next()) {
                            if let Some(col) = Color::from_char(c) {
                                color = Some(col);
                                continue;
                            }
                        }
                    }
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(line_no, format!("bad vertex {tok:?}")))?;
                    if v == 0 {
                        return Err(err(line_no, "vertices are numbered from 1".into()));
                    }
                    vertices.push(v - 1);
                }
                if vertices.is_empty() {
                    return Err(err(line_no, "face without vertices".into()));
                }
                faces.push(Face::new(vertices, color));
            }
            Some(other) => {
                return Err(err(line_no, format!("unknown statement {other:?}")));
            }
            None => unreachable!(),
        }
    }

    let n_vertices = n_vertices.ok_or_else(|| err(0, "missing 'v' statement".into()))?;
    Ok(Polyhedron::new(n_vertices, faces))
}

pub(super) fn write(p: &Polyhedron) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", p.n_vertices()).unwrap();
    for f in p.faces() {
        out.push('f');
        if let Some(c) = f.color {
            out.push(' ');
            out.push(c.as_char());
        }
        for v in &f.vertices {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}
