//! DIMACS-like text format for graphs.
//!
//! ```text
//! c optional comment
//! p <n> <edge_count>
//! e <u> <v>          1-based endpoints, one line per edge
//! x <id> <i> <j>     product coordinates, 1-based (optional)
//! ```

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical text: header, edges in sorted order, then coordinates.
pub fn write_graph(g: &Graph) -> String {
    let mut out = structure_text(g);
    if let Some(coords) = g.coords() {
        for (v, &(i, j)) in coords.iter().enumerate() {
            out.push_str(&format!("x {} {} {}\n", v + 1, i, j));
        }
    }
    out
}

fn structure_text(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// SHA-256 of the canonical header and edge lines, hex encoded. Coordinates
/// are not part of the hash.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(structure_text(g).as_bytes()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut coords: Vec<Option<(usize, usize)>> = Vec::new();
    let mut any_coords = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let nums: Vec<usize> = match tag {
            "c" => continue,
            "p" | "e" | "x" => fields
                .map(|f| {
                    f.parse()
                        .map_err(|_| err(format!("expected a number, got {f:?}")))
                })
                .collect::<Result<_>>()?,
            other => return Err(err(format!("unknown line type {other:?}"))),
        };
        match (tag, nums.as_slice()) {
            ("p", &[n, m]) => {
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                header = Some((n, m));
                coords = vec![None; n];
            }
            ("p", _) => return Err(err("header is `p <n> <edge_count>`".into())),
            (_, _) if header.is_none() => return Err(err("line before `p` header".into())),
            ("e", &[u, v]) => {
                let n = header.map_or(0, |h| h.0);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("edge {u} {v} out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            ("e", _) => return Err(err("edge line is `e <u> <v>`".into())),
            ("x", &[id, i, j]) => {
                if id == 0 || id > coords.len() {
                    return Err(err(format!("coordinate for unknown vertex {id}")));
                }
                if i == 0 || j == 0 {
                    return Err(err("coordinates are 1-based".into()));
                }
                if coords[id - 1].replace((i, j)).is_some() {
                    return Err(err(format!("duplicate coordinate for vertex {id}")));
                }
                any_coords = true;
            }
            _ => return Err(err("coordinate line is `x <id> <i> <j>`".into())),
        }
    }

    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `p` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::new(n, &edges)?;
    if !any_coords {
        return Ok(g);
    }
    let coords: Option<Vec<_>> = coords.into_iter().collect();
    let coords = coords.ok_or(Error::Parse {
        line: 0,
        msg: "coordinates must be given for every vertex or none".into(),
    })?;
    g.with_coords(coords)
}
