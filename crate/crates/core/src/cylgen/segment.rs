//! Passing between cylinder graphs and disk graphs: a cylinder graph cut
//! open along a shortest path between its boundaries is a disk graph, and
//! a disk graph whose outer cycle is split into four arcs closes up into a
//! cylinder graph when the two connecting arcs are identified.

use thiserror::Error;

use crate::diskgen::ops::outer_walk;
use crate::embed::map::Map;
use crate::embed::{edge_dart_of, girth_ok, zip_paths, Dart, EmbedError, MarkSite, MarkedPlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CylError {
    #[error("identification would create a loop")]
    WouldCreateLoop,
    #[error("a cycle of length at most 4 is not a boundary")]
    GirthViolation,
    #[error("boundary is not a cycle of length 3 or 4")]
    DegenerateBoundary,
    #[error("split covers {split} darts but the outer cycle has {outer}")]
    LengthMismatch { split: usize, outer: usize },
    #[error("invalid cutting path: {0}")]
    BadPath(String),
    #[error(transparent)]
    Embed(EmbedError),
}

impl From<EmbedError> for CylError {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::WouldCreateLoop => CylError::WouldCreateLoop,
            other => CylError::Embed(other),
        }
    }
}

/// A split of the outer cycle into arcs `A1 Q A2 Q'` read along the outer
/// walk from position `start`. `Q` and `Q'` have length `path`; the arcs
/// close up into boundaries of length `first` and `second`.
///
/// With `shared_edge` (only for `path == 0`) the two boundaries share an
/// edge: the arcs have lengths `first - 1` and `second - 1` and the shared
/// edge is drawn across the outer face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentSplit {
    pub start: usize,
    pub first: usize,
    pub path: usize,
    pub second: usize,
    pub shared_edge: bool,
}

impl SegmentSplit {
    /// Length of the outer cycle the split applies to.
    pub fn outer_len(&self) -> usize {
        if self.shared_edge {
            self.first + self.second - 2
        } else {
            self.first + self.second + 2 * self.path
        }
    }

    fn arcs(&self) -> (usize, usize) {
        if self.shared_edge {
            (self.first - 1, self.second - 1)
        } else {
            (self.first, self.second)
        }
    }

    /// Every split of an outer cycle of length `l` into boundaries of
    /// length 3 or 4 joined by paths of length at most 4.
    pub fn all(l: usize) -> Vec<SegmentSplit> {
        let mut out = Vec::new();
        for first in 3..=4 {
            for second in 3..=4 {
                for path in 0..=4 {
                    for shared_edge in [false, true] {
                        if shared_edge && path > 0 {
                            continue;
                        }
                        let s = SegmentSplit { start: 0, first, path, second, shared_edge };
                        if s.outer_len() == l {
                            out.extend((0..l).map(|start| SegmentSplit { start, ..s }));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Closes the disk graph `h` into a cylinder graph along `s`. The result
/// is rejected unless both boundaries are cycles of length 3 or 4 and every
/// other cycle has length at least 5.
pub fn identify_segments(h: &MarkedPlaneGraph, s: SegmentSplit) -> Result<MarkedPlaneGraph, CylError> {
    let g = h.graph();
    let walk = outer_walk(h);
    let l = walk.len();
    if s.outer_len() != l {
        return Err(CylError::LengthMismatch { split: s.outer_len(), outer: l });
    }
    if !(3..=4).contains(&s.first) || !(3..=4).contains(&s.second) || (s.shared_edge && s.path > 0) {
        return Err(CylError::DegenerateBoundary);
    }
    let at = |k: usize| walk[(s.start + k) % l];
    let (arc1, arc2) = s.arcs();
    let (mut m, de) = Map::from_graph(g);
    let ed = |d: Dart| edge_dart_of(g, &de, d);
    let first_a1 = ed(at(0));
    let first_a2 = ed(at(arc1 + s.path));
    if s.shared_edge {
        // both corners lie on the outer face; the new edge splits it in two
        let (x0, x1) = (g.tail(at(0)), g.tail(at(arc1)));
        m.add_edge_after(x0, Some(first_a1.edge), x1, Some(first_a2.edge));
    } else {
        let q: Vec<_> = (arc1..arc1 + s.path).map(|k| ed(at(k))).collect();
        let q2: Vec<_> = (arc1 + s.path + arc2..l).map(|k| ed(at(k))).collect();
        zip_paths(&mut m, &q, first_a2, &q2, first_a1)?;
    }
    let (g2, ds) = m.finish(&[first_a1, first_a2])?;
    let mg = MarkedPlaneGraph::cylinder(g2, MarkSite::Face(ds[0]), MarkSite::Face(ds[1])).map_err(|_| CylError::DegenerateBoundary)?;
    if mg.mark_len(0) != s.first || mg.mark_len(1) != s.second {
        return Err(CylError::DegenerateBoundary);
    }
    if !girth_ok(&mg) {
        return Err(CylError::GirthViolation);
    }
    Ok(mg)
}

/// Cuts a cylinder graph along `path` (vertices from boundary `C1` to
/// boundary `C2`, inner vertices on neither), doubling the path. The
/// outer face of the result has length `l(C1) + l(C2) + 2 (len(path) - 1)`.
pub fn cut_along_path(mg: &MarkedPlaneGraph, path: &[u32]) -> Result<MarkedPlaneGraph, CylError> {
    let g = mg.graph();
    let (f1, f2) = match (mg.mark_face(0), mg.mark_face(1)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(CylError::BadPath("both boundaries must be faces".into())),
    };
    let c1 = mg.mark_vertices(0);
    let c2 = mg.mark_vertices(1);
    let Some((&v0, &vp)) = path.first().zip(path.last()) else {
        return Err(CylError::BadPath("empty path".into()));
    };
    if !c1.contains(&v0) || !c2.contains(&vp) {
        return Err(CylError::BadPath("path must run from C1 to C2".into()));
    }
    if path[1..path.len().saturating_sub(1)].iter().any(|v| c1.contains(v) || c2.contains(v)) || (path.len() > 1 && c2.contains(&v0)) {
        return Err(CylError::BadPath("inner path vertices must avoid the boundaries".into()));
    }
    if mg.mark_edges(0).iter().any(|e| mg.mark_edges(1).contains(e)) {
        return Err(CylError::BadPath("boundaries share an edge".into()));
    }
    let p = path.len() - 1;
    let (mut m, de) = Map::from_graph(g);
    // a parallel copy of each path edge, drawn just clockwise of it at its
    // tail; the digon between the two is opened by the splits below
    let mut copies = Vec::with_capacity(p);
    let mut originals = Vec::with_capacity(p);
    for i in 0..p {
        let (u, w) = (path[i], path[i + 1]);
        let d = g.find_dart(u, w).ok_or_else(|| CylError::BadPath(format!("{u}-{w} is not an edge")))?;
        let e = de[d as usize];
        let (iu, iw) = (m.pos(u, e) + 1, m.pos(w, e));
        copies.push(m.add_edge_at(u, iu, w, iw));
        originals.push(e);
    }
    // corner of face `f` at `v`: between the face's outgoing dart and the next entry
    let corner = |m: &Map, f: u32, v: u32| -> usize {
        let d = g.face_darts(f).iter().copied().find(|&d| g.tail(d) == v).expect("vertex on boundary");
        m.pos(v, edge_dart_of(g, &de, d).edge)
    };
    for (i, &v) in path.iter().enumerate() {
        let a = if i == 0 { corner(&m, f1, v) } else { m.pos(v, copies[i - 1]) };
        let b = if i == p { corner(&m, f2, v) } else { m.pos(v, originals[i]) };
        let deg = m.rot[v as usize].len();
        let len = (b + deg - a) % deg;
        m.split_off(v, (a + 1) % deg, len);
    }
    let d1 = *g.face_darts(f1).first().expect("boundary has darts");
    let (h, ds) = m.finish(&[edge_dart_of(g, &de, d1)])?;
    Ok(MarkedPlaneGraph::disk(h, ds[0])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{canonical_key, IsoGroup};

    #[test]
    fn octagon_pinches_into_two_squares() {
        let h = MarkedPlaneGraph::bare_cycle(8);
        let s = SegmentSplit { start: 0, first: 4, path: 0, second: 4, shared_edge: false };
        let g = identify_segments(&h, s).unwrap();
        assert_eq!(g.graph().n(), 7);
        assert_eq!((g.mark_len(0), g.mark_len(1)), (4, 4));
        assert!(g.is_trivial());
    }

    #[test]
    fn hexagon_with_shared_edge() {
        let h = MarkedPlaneGraph::bare_cycle(6);
        let s = SegmentSplit { start: 2, first: 4, path: 0, second: 4, shared_edge: true };
        let g = identify_segments(&h, s).unwrap();
        assert_eq!((g.graph().n(), g.graph().m()), (6, 7));
        assert_eq!((g.mark_len(0), g.mark_len(1)), (4, 4));
    }

    #[test]
    fn short_arcs_are_rejected() {
        let h = MarkedPlaneGraph::bare_cycle(10);
        let s = SegmentSplit { start: 0, first: 2, path: 2, second: 4, shared_edge: false };
        assert_eq!(identify_segments(&h, s), Err(CylError::DegenerateBoundary));
    }

    #[test]
    fn squares_joined_by_a_two_path() {
        let h = MarkedPlaneGraph::bare_cycle(12);
        let s = SegmentSplit { start: 0, first: 4, path: 2, second: 4, shared_edge: false };
        let g = identify_segments(&h, s).unwrap();
        assert_eq!(g.graph().n(), 9);
        let bad = SegmentSplit { path: 1, ..s };
        assert!(matches!(identify_segments(&h, bad), Err(CylError::LengthMismatch { .. })));
    }

    #[test]
    fn cut_then_identify_round_trips() {
        let h = MarkedPlaneGraph::bare_cycle(12);
        let s = SegmentSplit { start: 3, first: 4, path: 2, second: 4, shared_edge: false };
        let g = identify_segments(&h, s).unwrap();
        let c1 = g.mark_vertices(0);
        let c2 = g.mark_vertices(1);
        // the 2-path between the squares
        let g0 = g.graph();
        let mid = (0..g0.n() as u32).find(|&v| !c1.contains(&v) && !c2.contains(&v)).unwrap();
        let a = *g0.neighbors(mid).iter().find(|v| c1.contains(v)).unwrap();
        let b = *g0.neighbors(mid).iter().find(|v| c2.contains(v)).unwrap();
        let cut = cut_along_path(&g, &[a, mid, b]).unwrap();
        assert_eq!(cut.mark_len(0), 12);
        assert!(cut.is_trivial());
        let key = canonical_key(&g, IsoGroup::Reflect);
        let back = SegmentSplit::all(12)
            .into_iter()
            .filter_map(|s| identify_segments(&cut, s).ok())
            .any(|r| canonical_key(&r, IsoGroup::Reflect) == key);
        assert!(back);
    }
}
