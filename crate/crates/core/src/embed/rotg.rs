//! The `rotg v1` text format: one record per graph.
//!
//! ```text
//! # comment
//! 5 5
//! 0: 1 4
//! ...
//! mark B: 0 1
//! ```
//!
//! Marks name a directed edge of the marked face (the face on its left) or,
//! for a degenerate boundary, a vertex: `mark C2: vertex 3`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{EmbedError, Mark, MarkSite, MarkedPlaneGraph, PlaneGraph, Role};

#[derive(Debug, Error)]
pub enum RotgError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: EmbedError },
}

fn syntax(line: usize, msg: impl Into<String>) -> RotgError {
    RotgError::Syntax { line, msg: msg.into() }
}

/// Serializes one record, terminated by a newline.
pub fn write_record(mg: &MarkedPlaneGraph) -> String {
    let g = mg.graph();
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for v in 0..g.n() as u32 {
        let _ = write!(s, "{v}:");
        for w in g.neighbors(v) {
            let _ = write!(s, " {w}");
        }
        s.push('\n');
    }
    for mk in mg.marks() {
        match mk.site {
            MarkSite::Face(d) => {
                let _ = writeln!(s, "mark {}: {} {}", mk.role.as_str(), g.tail(d), g.head(d));
            }
            MarkSite::Vertex(v) => {
                let _ = writeln!(s, "mark {}: vertex {}", mk.role.as_str(), v);
            }
        }
    }
    s
}

pub fn write_records<'a>(it: impl IntoIterator<Item = &'a MarkedPlaneGraph>) -> String {
    it.into_iter().map(write_record).collect()
}

fn parse_u32(tok: &str, line: usize) -> Result<u32, RotgError> {
    tok.parse().map_err(|_| syntax(line, format!("expected integer, found '{tok}'")))
}

/// Parses every record in `text`.
pub fn parse_records(text: &str) -> Result<Vec<MarkedPlaneGraph>, RotgError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < lines.len() {
        let (hl, header) = lines[k];
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 || header.contains(':') {
            return Err(syntax(hl, "expected record header 'n m'"));
        }
        let n = parse_u32(toks[0], hl)? as usize;
        let m = parse_u32(toks[1], hl)? as usize;
        k += 1;
        let mut rot = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        for _ in 0..n {
            let (ln, l) = *lines.get(k).ok_or_else(|| syntax(hl, "record truncated"))?;
            let (head, rest) = l.split_once(':').ok_or_else(|| syntax(ln, "expected 'v: neighbors'"))?;
            let v = parse_u32(head.trim(), ln)? as usize;
            if v >= n || seen[v] {
                return Err(syntax(ln, format!("bad or repeated vertex {v}")));
            }
            seen[v] = true;
            rot[v] = rest.split_whitespace().map(|t| parse_u32(t, ln)).collect::<Result<_, _>>()?;
            k += 1;
        }
        let g = PlaneGraph::from_rotations(rot).map_err(|e| RotgError::Invalid { line: hl, source: e })?;
        if g.m() != m {
            return Err(syntax(hl, format!("header says {m} edges, rotations give {}", g.m())));
        }
        let mut marks = Vec::new();
        while let Some(&(ln, l)) = lines.get(k) {
            let Some(rest) = l.strip_prefix("mark ") else { break };
            let (role, site) = rest.split_once(':').ok_or_else(|| syntax(ln, "expected 'mark ROLE: ...'"))?;
            let role = match role.trim() {
                "B" => Role::B,
                "C1" => Role::C1,
                "C2" => Role::C2,
                r => return Err(syntax(ln, format!("unknown role '{r}'"))),
            };
            let toks: Vec<&str> = site.split_whitespace().collect();
            let site = match toks.as_slice() {
                ["vertex", v] => MarkSite::Vertex(parse_u32(v, ln)?),
                [u, v] => {
                    let (u, v) = (parse_u32(u, ln)?, parse_u32(v, ln)?);
                    MarkSite::Face(g.find_dart(u, v).ok_or(RotgError::Invalid { line: ln, source: EmbedError::NoSuchEdge(u, v) })?)
                }
                _ => return Err(syntax(ln, "expected 'u v' or 'vertex u'")),
            };
            marks.push(Mark { role, site });
            k += 1;
        }
        out.push(MarkedPlaneGraph::new(g, marks).map_err(|e| RotgError::Invalid { line: hl, source: e })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mg = MarkedPlaneGraph::bare_cycle(7);
        let text = write_record(&mg);
        let back = parse_records(&text).unwrap();
        assert_eq!(back, vec![mg]);
    }

    #[test]
    fn comments_and_vertex_marks() {
        let text = "# square with a marked vertex\n4 4\n0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2 # last\nmark C1: 0 1\nmark C2: vertex 2\n";
        let r = parse_records(text).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].marks()[1].site, MarkSite::Vertex(2));
        assert_eq!(parse_records(&write_records(&r)).unwrap(), r);
    }

    #[test]
    fn rejects_bad_counts() {
        assert!(parse_records("3 2\n0: 1 2\n1: 2 0\n2: 0 1\nmark B: 0 1\n").is_err());
        assert!(parse_records("3 3\n0: 1 2\n").is_err());
    }
}
