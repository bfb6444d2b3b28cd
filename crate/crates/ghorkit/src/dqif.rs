//! DQIF, a line-oriented interchange format for dimer quivers.
//!
//! ```text
//! surface <N>
//! vertices <count>
//! arrow <id> <tail> <head> <c_1> ... <c_N>
//! face <ccw|cw> <arrow-id> <arrow-id> ...
//! ```
//!
//! `#` starts a comment. Canonical form: sections in the order above, arrows
//! sorted by id, the ccw face block before the cw block with each block
//! sorted by its least contained arrow id, single spaces, newline-terminated.
//! Face traversals keep their given rotation.

use crate::error::{Error, Result};
use crate::quiver::{Arrow, DimerQuiver, Face, Orientation};
use crate::surface::make_surface;

/// Sanity limits keeping downstream arithmetic and allocation safe on
/// untrusted input.
const MAX_SIDE_PAIRS: usize = 64;
const MAX_VERTICES: usize = 65_536;
const MAX_CROSSING: i64 = 1_000_000_000;

fn parse_usize(tok: &str, what: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what}: {tok:?}") })
}

fn parse_i64(tok: &str, what: &str, line: usize) -> Result<i64> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what}: {tok:?}") })
}

pub fn parse_dqif(text: &str) -> Result<DimerQuiver> {
    let mut surface = None;
    let mut vertex_count: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut faces: Vec<(Orientation, Vec<String>, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "surface" => {
                if surface.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate surface line".into() });
                }
                if toks.len() != 2 {
                    return Err(Error::Parse { line, msg: "surface takes one number".into() });
                }
                let n = parse_usize(toks[1], "side pair count", line)?;
                if n > MAX_SIDE_PAIRS {
                    return Err(Error::Parse {
                        line,
                        msg: format!("side pair count {n} exceeds the limit {MAX_SIDE_PAIRS}"),
                    });
                }
                surface = Some(
                    make_surface(n).map_err(|e| Error::Parse { line, msg: e.to_string() })?,
                );
            }
            "vertices" => {
                if vertex_count.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate vertices line".into() });
                }
                if toks.len() != 2 {
                    return Err(Error::Parse { line, msg: "vertices takes one number".into() });
                }
                let c = parse_usize(toks[1], "vertex count", line)?;
                if c == 0 {
                    return Err(Error::Parse { line, msg: "vertex count must be positive".into() });
                }
                if c > MAX_VERTICES {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex count {c} exceeds the limit {MAX_VERTICES}"),
                    });
                }
                vertex_count = Some(c);
            }
            "arrow" => {
                let surface = surface
                    .ok_or(Error::Parse { line, msg: "arrow before surface line".into() })?;
                let count = vertex_count
                    .ok_or(Error::Parse { line, msg: "arrow before vertices line".into() })?;
                let n = surface.side_pairs;
                if toks.len() != 4 + n {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "arrow needs id, tail, head and {n} crossing entries, got {} fields",
                            toks.len() - 1
                        ),
                    });
                }
                let id = toks[1].to_string();
                if arrows.iter().any(|a| a.id == id) {
                    return Err(Error::Parse { line, msg: format!("duplicate arrow id {id:?}") });
                }
                let tail = parse_usize(toks[2], "tail vertex", line)?;
                let head = parse_usize(toks[3], "head vertex", line)?;
                for (what, v) in [("tail", tail), ("head", head)] {
                    if v == 0 || v > count {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unknown {what} vertex {v}"),
                        });
                    }
                }
                let crossing = toks[4..]
                    .iter()
                    .map(|t| parse_i64(t, "crossing entry", line))
                    .collect::<Result<Vec<i64>>>()?;
                if let Some(big) = crossing.iter().find(|c| c.abs() > MAX_CROSSING) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("crossing entry {big} exceeds the limit {MAX_CROSSING}"),
                    });
                }
                arrows.push(Arrow { id, tail, head, crossing });
            }
            "face" => {
                if toks.len() < 3 {
                    return Err(Error::Parse {
                        line,
                        msg: "face needs an orientation and at least one arrow".into(),
                    });
                }
                let orientation = match toks[1] {
                    "ccw" => Orientation::Ccw,
                    "cw" => Orientation::Cw,
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("bad orientation {other:?}, expected ccw or cw"),
                        })
                    }
                };
                faces.push((
                    orientation,
                    toks[2..].iter().map(|t| t.to_string()).collect(),
                    line,
                ));
            }
            other => {
                return Err(Error::Parse { line, msg: format!("unknown directive {other:?}") });
            }
        }
    }

    let surface = surface.ok_or(Error::Parse { line: 0, msg: "missing surface line".into() })?;
    let vertex_count =
        vertex_count.ok_or(Error::Parse { line: 0, msg: "missing vertices line".into() })?;

    // Canonical internal form: arrows sorted by id, then resolve face ids.
    arrows.sort_by(|a, b| a.id.cmp(&b.id));
    let mut resolved: Vec<Face> = Vec::with_capacity(faces.len());
    for (orientation, ids, line) in faces {
        let mut idx = Vec::with_capacity(ids.len());
        for id in &ids {
            let k = arrows.iter().position(|a| &a.id == id).ok_or_else(|| Error::Parse {
                line,
                msg: format!("face references unknown arrow {id:?}"),
            })?;
            idx.push(k);
        }
        resolved.push(Face { orientation, arrows: idx });
    }
    let quiver = DimerQuiver { surface, vertex_count, arrows, faces: resolved };
    Ok(canonicalize(quiver))
}

/// Orders the face list canonically; traversal rotations are untouched.
fn canonicalize(mut quiver: DimerQuiver) -> DimerQuiver {
    quiver.faces.sort_by_key(|f| {
        let least = f.arrows.iter().map(|&a| quiver.arrows[a].id.clone()).min();
        (f.orientation, least)
    });
    quiver
}

pub fn serialize_dqif(quiver: &DimerQuiver) -> String {
    let mut out = String::new();
    out.push_str(&format!("surface {}\n", quiver.surface.side_pairs));
    out.push_str(&format!("vertices {}\n", quiver.vertex_count));
    let mut order: Vec<usize> = (0..quiver.arrows.len()).collect();
    order.sort_by(|&a, &b| quiver.arrows[a].id.cmp(&quiver.arrows[b].id));
    for &k in &order {
        let a = &quiver.arrows[k];
        out.push_str(&format!("arrow {} {} {}", a.id, a.tail, a.head));
        for c in &a.crossing {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    let mut faces: Vec<&Face> = quiver.faces.iter().collect();
    faces.sort_by_key(|f| {
        let least = f.arrows.iter().map(|&a| quiver.arrows[a].id.clone()).min();
        (f.orientation, least)
    });
    for f in faces {
        out.push_str(&format!("face {}", f.orientation));
        for &a in &f.arrows {
            out.push_str(&format!(" {}", quiver.arrows[a].id));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEX: &str = "surface 2\nvertices 1\narrow l1 1 1 1 0\narrow l2 1 1 0 1\narrow l3 1 1 -1 -1\nface ccw l1 l2 l3\nface cw l1 l3 l2\n";

    #[test]
    fn parse_hex() {
        let q = parse_dqif(HEX).unwrap();
        assert_eq!(q.vertex_count, 1);
        assert_eq!(q.arrows.len(), 3);
        assert_eq!(q.faces.len(), 2);
        assert!(q.validate().is_valid());
    }

    #[test]
    fn round_trip_is_identity_on_canonical_text() {
        let q = parse_dqif(HEX).unwrap();
        assert_eq!(serialize_dqif(&q), HEX);
    }

    #[test]
    fn permuted_input_canonicalizes() {
        let permuted = "surface 2\nvertices 1\narrow l3 1 1 -1 -1\narrow l1 1 1 1 0\narrow l2 1 1 0 1\nface cw l1 l3 l2\nface ccw l1 l2 l3\n";
        let q = parse_dqif(permuted).unwrap();
        assert_eq!(serialize_dqif(&q), HEX);
    }

    #[test]
    fn missing_arrow_reference() {
        let text = "surface 2\nvertices 1\narrow l1 1 1 1 0\nface ccw l1 nope\n";
        match parse_dqif(text) {
            Err(Error::Parse { line: 4, msg }) => assert!(msg.contains("nope")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_arrow_id() {
        let text = "surface 2\nvertices 1\narrow l1 1 1 1 0\narrow l1 1 1 0 1\n";
        assert!(matches!(parse_dqif(text), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn crossing_length_must_match_surface() {
        let text = "surface 2\nvertices 1\narrow l1 1 1 1 0 3\n";
        assert!(matches!(parse_dqif(text), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn unknown_vertex_rejected() {
        let text = "surface 2\nvertices 1\narrow l1 1 2 1 0\n";
        assert!(matches!(parse_dqif(text), Err(Error::Parse { line: 3, .. })));
    }
}
