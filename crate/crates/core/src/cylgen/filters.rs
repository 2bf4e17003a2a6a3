//! Special sublists of the cylinder catalog: members far apart, with a long
//! face, with all short cycles through one vertex, or with a bridge.

use std::collections::HashSet;

use crate::catalog::{Entry, GenerationRecord, OpKind};
use crate::color::is_critical;
use crate::embed::{
    boundary_distance, canonical_key, is_two_edge_connected, IsoGroup, MarkSite, MarkedPlaneGraph, PlaneGraph,
};

use super::{classc::delete_vertices, separating_cycles, CylinderCatalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    /// Distance at least 3 and a face of length at least 7.
    A,
    /// Distance at least 3 and the short cycles share an unprecolored vertex.
    B,
    /// Distance at least 3 and the short cycles share a precolored vertex.
    C,
    /// Distance at least 2 and a face of length at least 9.
    D,
    /// Distance at least 2 and a bridge.
    E,
    /// Distance at least 2 and a long face whose neighbor blocks all short
    /// connections through one edge and one vertex.
    F,
}

impl Filter {
    pub const ALL: [Filter; 6] = [Filter::A, Filter::B, Filter::C, Filter::D, Filter::E, Filter::F];

    pub fn letter(self) -> char {
        match self {
            Filter::A => 'a',
            Filter::B => 'b',
            Filter::C => 'c',
            Filter::D => 'd',
            Filter::E => 'e',
            Filter::F => 'f',
        }
    }

    pub fn holds(self, mg: &MarkedPlaneGraph) -> bool {
        let dist = boundary_distance(mg);
        let g = mg.graph();
        let longest = (0..g.face_count() as u32).map(|f| g.face_len(f)).max().unwrap_or(0);
        match self {
            Filter::A => dist >= 3 && longest >= 7,
            Filter::B => dist >= 3 && common_vertex(mg, false),
            Filter::C => dist >= 3 && common_vertex(mg, true),
            Filter::D => dist >= 2 && longest >= 9,
            Filter::E => dist >= 2 && !is_two_edge_connected(g),
            Filter::F => dist >= 2 && longest >= 7 && blocked_by_edge_and_vertex(mg),
        }
    }
}

/// Whether all short cycles other than the boundaries pass through a
/// common vertex that is (or is not) precolored. Holds vacuously when
/// there are no such cycles.
fn common_vertex(mg: &MarkedPlaneGraph, precolored: bool) -> bool {
    let Some(cycles) = separating_cycles(mg) else { return false };
    let Some(first) = cycles.first() else { return true };
    let marked = mg.marked_vertices();
    first
        .vertices
        .iter()
        .filter(|v| cycles.iter().all(|c| c.vertices.contains(v)))
        .any(|v| marked.contains(v) == precolored)
}

/// Paths of length at most `max` from the first to the second boundary
/// with no inner vertex on either boundary, as vertex lists.
pub fn boundary_paths(mg: &MarkedPlaneGraph, max: usize) -> Vec<Vec<u32>> {
    let g = mg.graph();
    let (a, b) = (mg.mark_vertices(0), mg.mark_vertices(1));
    let mut out = Vec::new();
    let mut path = Vec::new();
    for &s in &a {
        path.push(s);
        extend_paths(g, &a, &b, max, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_paths(g: &PlaneGraph, a: &[u32], b: &[u32], max: usize, path: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if path.len() > max {
        return;
    }
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if path.contains(&w) || a.contains(&w) {
            continue;
        }
        path.push(w);
        if b.contains(&w) {
            out.push(path.clone());
        } else {
            extend_paths(g, a, b, max, path, out);
        }
        path.pop();
    }
}

fn has_edge(vs: &[u32], e: (u32, u32), closed: bool) -> bool {
    let k = vs.len();
    let pairs = if closed { k } else { k.saturating_sub(1) };
    (0..pairs).any(|i| {
        let (x, y) = (vs[i], vs[(i + 1) % k]);
        (x.min(y), x.max(y)) == e
    })
}

fn blocked_by_edge_and_vertex(mg: &MarkedPlaneGraph) -> bool {
    let g = mg.graph();
    let Some(cycles) = separating_cycles(mg) else { return false };
    let paths = boundary_paths(mg, 4);
    let marked_faces: Vec<u32> = (0..2).filter_map(|i| mg.mark_face(i)).collect();
    for long in (0..g.face_count() as u32).filter(|&f| g.face_len(f) >= 7) {
        for &d in g.face_darts(long) {
            let m = g.face_of(g.rev(d));
            if m == long || marked_faces.contains(&m) {
                continue;
            }
            let (u, w) = (g.tail(d), g.head(d));
            let e = (u.min(w), u.max(w));
            if !paths.iter().filter(|p| p.len() == 3).all(|p| has_edge(p, e, false)) {
                continue;
            }
            for x in g.face_vertices(m) {
                let paths_ok = paths.iter().all(|p| has_edge(p, e, false) || p.contains(&x));
                let cycles_ok = cycles.iter().all(|c| has_edge(&c.vertices, e, true) || c.vertices.contains(&x));
                if paths_ok && cycles_ok {
                    return true;
                }
            }
        }
    }
    false
}

/// The boundary `i` as a triangle `v v' v''` with `v'`, `v''` of degree 2:
/// returns `(v, v', v'')`.
fn strippable(mg: &MarkedPlaneGraph, i: usize) -> Option<(u32, u32, u32)> {
    let g = mg.graph();
    let vs = mg.mark_vertices(i);
    if vs.len() != 3 {
        return None;
    }
    (0..3).find_map(|k| {
        let (v, a, b) = (vs[k], vs[(k + 1) % 3], vs[(k + 2) % 3]);
        (g.degree(a) == 2 && g.degree(b) == 2 && g.degree(v) > 2).then_some((v, a, b))
    })
}

/// Shrinks the given triangle boundaries to their third vertex.
fn strip(mg: &MarkedPlaneGraph, which: &[usize]) -> Option<MarkedPlaneGraph> {
    let g = mg.graph();
    let mut dead = Vec::new();
    let mut keep = [None, None];
    for &i in which {
        let (v, a, b) = strippable(mg, i)?;
        dead.extend([a, b]);
        keep[i] = Some(v);
    }
    let (h, id) = delete_vertices(g, &dead)?;
    let mut sites = [MarkSite::Vertex(0); 2];
    for i in 0..2 {
        sites[i] = match (keep[i], mg.marks()[i].site) {
            (Some(v), _) => MarkSite::Vertex(id[v as usize]),
            (None, MarkSite::Face(d)) => MarkSite::Face(h.find_dart(id[g.tail(d) as usize], id[g.head(d) as usize])?),
            (None, MarkSite::Vertex(v)) => MarkSite::Vertex(id[v as usize]),
        };
    }
    MarkedPlaneGraph::cylinder(h, sites[0], sites[1]).ok()
}

/// Nontrivial critical graphs with one or both boundaries a single vertex
/// and every other short cycle separating the boundaries, obtained from
/// catalog members with disjoint boundaries by shrinking a triangle
/// boundary whose other two vertices have degree 2.
pub fn vertex_boundary_family(cat: &CylinderCatalog) -> Vec<Entry> {
    let group: IsoGroup = cat.group();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (_, e) in cat.all() {
        let mg = &e.entry.graph;
        let c1 = mg.mark_vertices(0);
        if mg.mark_vertices(1).iter().any(|v| c1.contains(v)) {
            continue;
        }
        for which in [&[0][..], &[1], &[0, 1]] {
            let Some(s) = strip(mg, which) else { continue };
            // short cycles through a vertex boundary do not separate it
            if s.is_trivial() || separating_cycles(&s).is_none() || !is_critical(&s) {
                continue;
            }
            let key = canonical_key(&s, group);
            if seen.insert(key.clone()) {
                out.push(Entry {
                    graph: s,
                    key,
                    provenance: GenerationRecord::new(OpKind::Loaded, format!("shrunk boundaries {which:?}")),
                    derivations: 1,
                });
            }
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}
