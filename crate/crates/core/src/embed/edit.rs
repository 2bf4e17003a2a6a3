//! Primitive rewrites of plane graphs. All of them go through the mutable
//! map and are revalidated (simplicity, connectivity, Euler) on exit.

use super::map::{EdgeDart, Map};
use super::{Dart, EmbedError, MarkSite, MarkedPlaneGraph, PlaneGraph};

/// A path along a face walk: `len` consecutive darts starting at `start`,
/// all with the same face on their left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryPath {
    pub start: Dart,
    pub len: usize,
}

impl BoundaryPath {
    /// The darts of the path.
    pub fn darts(&self, g: &PlaneGraph) -> Vec<Dart> {
        let mut out = Vec::with_capacity(self.len);
        let mut d = self.start;
        for _ in 0..self.len {
            out.push(d);
            d = g.face_next(d);
        }
        out
    }

    /// The `len + 1` vertices of the path.
    pub fn vertices(&self, g: &PlaneGraph) -> Vec<u32> {
        let mut out = vec![g.tail(self.start)];
        let mut d = self.start;
        for _ in 0..self.len {
            out.push(g.head(d));
            d = g.face_next(d);
        }
        out
    }
}

/// Subdivides edge `u-v` by a new vertex with id `g.n()`.
pub fn subdivide(g: &PlaneGraph, u: u32, v: u32) -> Result<PlaneGraph, EmbedError> {
    let d = g.find_dart(u, v).ok_or(EmbedError::NoSuchEdge(u, v))?;
    let (mut m, de) = Map::from_graph(g);
    m.subdivide(de[d as usize]);
    m.finish(&[]).map(|r| r.0)
}

/// Replaces the 2-path through degree-2 vertex `v` by a single edge.
pub fn suppress_degree2(g: &PlaneGraph, v: u32) -> Result<PlaneGraph, EmbedError> {
    if g.degree(v) != 2 {
        return Err(EmbedError::EmbeddingBroken(format!("vertex {v} has degree {}", g.degree(v))));
    }
    let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    if g.has_edge(a, b) {
        return Err(EmbedError::WouldCreateParallel);
    }
    let ren = |w: u32| if w > v { w - 1 } else { w };
    let mut rot = Vec::with_capacity(g.n() - 1);
    for w in 0..g.n() as u32 {
        if w == v {
            continue;
        }
        rot.push(
            g.neighbors(w)
                .iter()
                .map(|&x| {
                    if x != v {
                        ren(x)
                    } else if w == a {
                        ren(b)
                    } else {
                        ren(a)
                    }
                })
                .collect(),
        );
    }
    PlaneGraph::from_rotations(rot)
}

/// Identifies the vertices of two face paths of equal length in one map,
/// the `j`-th vertex of `p` with the `(t - j)`-th of `q`. Edge ids refer to
/// the map; the corners used are those of the faces the paths run along.
pub(crate) fn zip_paths(m: &mut Map, p: &[EdgeDart], p_next: EdgeDart, q: &[EdgeDart], q_next: EdgeDart) -> Result<(), EmbedError> {
    let t = p.len();
    assert_eq!(t, q.len());
    // corner at the j-th vertex of a path: after its outgoing edge along the face
    let corner = |path: &[EdgeDart], next: EdgeDart, j: usize| if j < path.len() { path[j] } else { next };
    let mut pairs = Vec::with_capacity(t + 1);
    for j in 0..=t {
        let a = corner(p, p_next, j);
        let b = corner(q, q_next, t - j);
        pairs.push((a, b));
    }
    for (a, b) in pairs {
        let x = m.tail_of(a);
        let y = m.tail_of(b);
        if x == y {
            continue;
        }
        m.splice(x, a.edge, y, b.edge)?;
    }
    Ok(())
}

/// Identifies two face paths of equal length in `g` (`p_j` with
/// `q_{t-j}`) and suppresses the resulting parallel edges.
pub fn identify_path_pair(g: &PlaneGraph, p: BoundaryPath, q: BoundaryPath) -> Result<PlaneGraph, EmbedError> {
    if p.len != q.len {
        return Err(EmbedError::EmbeddingBroken("paths differ in length".into()));
    }
    let (mut m, de) = Map::from_graph(g);
    let (pe, pn) = path_edge_darts(g, &de, p);
    let (qe, qn) = path_edge_darts(g, &de, q);
    zip_paths(&mut m, &pe, pn, &qe, qn)?;
    m.finish(&[]).map(|r| r.0)
}

/// Identifies a face path of `g1` with one of `g2` (`p_j` with `q_{t-j}`).
/// Vertices of `g2` follow those of `g1` before compaction.
pub fn join_along_paths(g1: &PlaneGraph, p: BoundaryPath, g2: &PlaneGraph, q: BoundaryPath) -> Result<PlaneGraph, EmbedError> {
    if p.len != q.len {
        return Err(EmbedError::EmbeddingBroken("paths differ in length".into()));
    }
    let (mut m, de1) = Map::from_graph(g1);
    let de2 = m.add_graph(g2);
    let (pe, pn) = path_edge_darts(g1, &de1, p);
    let (qe, qn) = path_edge_darts(g2, &de2, q);
    zip_paths(&mut m, &pe, pn, &qe, qn)?;
    m.finish(&[]).map(|r| r.0)
}

/// The map dart corresponding to dart `d` of `g`, given per-dart edge ids.
pub(crate) fn edge_dart_of(g: &PlaneGraph, de: &[u32], d: Dart) -> EdgeDart {
    // edges are loaded with `ends[e][0]` at the tail of their lower dart
    EdgeDart { edge: de[d as usize], end: if d < g.rev(d) { 0 } else { 1 } }
}

/// Edge darts of a path plus the dart following it along the face.
pub(crate) fn path_edge_darts(g: &PlaneGraph, de: &[u32], p: BoundaryPath) -> (Vec<EdgeDart>, EdgeDart) {
    let ed = |d: Dart| edge_dart_of(g, de, d);
    let darts = p.darts(g);
    let next = match darts.last() {
        Some(&d) => g.face_next(d),
        None => p.start,
    };
    (darts.into_iter().map(ed).collect(), ed(next))
}

/// Draws a path of `len` new edges inside the face left of `di` and `dj`,
/// from `tail(di)` to `tail(dj)`. Marks are carried over; the new face
/// containing `di` keeps a face mark if that face was marked.
pub fn add_face_path(mg: &MarkedPlaneGraph, di: Dart, dj: Dart, len: usize) -> Result<MarkedPlaneGraph, EmbedError> {
    let g = mg.graph();
    let (u, w) = (g.tail(di), g.tail(dj));
    if len == 0 || g.face_of(di) != g.face_of(dj) {
        return Err(EmbedError::EmbeddingBroken("path ends must lie on one face".into()));
    }
    if u == w || (len == 1 && g.has_edge(u, w)) {
        return Err(EmbedError::WouldCreateParallel);
    }
    let (mut m, de) = Map::from_graph(g);
    let mut prev = (u, Some(de[di as usize]));
    for _ in 1..len {
        let x = m.add_vertex();
        let e = m.add_edge_after(prev.0, prev.1, x, None);
        prev = (x, Some(e));
    }
    m.add_edge_after(prev.0, prev.1, w, Some(de[dj as usize]));
    let faces: Vec<(usize, EdgeDart)> = mg
        .marks()
        .iter()
        .enumerate()
        .filter_map(|(i, mk)| match mk.site {
            MarkSite::Face(d) => Some((i, edge_dart_of(g, &de, d))),
            MarkSite::Vertex(_) => None,
        })
        .collect();
    let markers: Vec<EdgeDart> = faces.iter().map(|f| f.1).collect();
    let (h, ds) = m.finish(&markers)?;
    let mut marks = mg.marks().to_vec();
    for ((i, _), d) in faces.iter().zip(ds) {
        marks[*i].site = MarkSite::Face(d);
    }
    MarkedPlaneGraph::new(h, marks)
}

/// Splits `v`: rotation entries `start..start + len` (cyclic) move to a
/// new vertex with id `g.n()`.
pub fn split_vertex(g: &PlaneGraph, v: u32, start: usize, len: usize) -> Result<PlaneGraph, EmbedError> {
    let deg = g.degree(v);
    if len == 0 || len >= deg {
        return Err(EmbedError::EmbeddingBroken("split must leave both parts non-empty".into()));
    }
    let (mut m, _) = Map::from_graph(g);
    m.split_off(v, start % deg, len);
    m.finish(&[]).map(|r| r.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = (0..g.face_count() as u32).map(|f| g.face_len(f)).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn subdivide_cycle() {
        let g = subdivide(&PlaneGraph::cycle(5), 0, 1).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(face_lengths(&g), vec![6, 6]);
    }

    #[test]
    fn suppress_undoes_subdivide() {
        let g = subdivide(&PlaneGraph::cycle(6), 2, 3).unwrap();
        let h = suppress_degree2(&g, 6).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(face_lengths(&h), vec![6, 6]);
    }

    #[test]
    fn suppress_on_triangle_is_parallel() {
        let g = PlaneGraph::cycle(3);
        assert_eq!(suppress_degree2(&g, 0), Err(EmbedError::WouldCreateParallel));
    }

    #[test]
    fn join_two_pentagons_on_an_edge() {
        let c = PlaneGraph::cycle(5);
        let d = c.find_dart(0, 1).unwrap();
        let p = BoundaryPath { start: d, len: 1 };
        let g = join_along_paths(&c, p, &c, p).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 9);
        assert_eq!(face_lengths(&g), vec![5, 5, 8]);
    }

    #[test]
    fn join_along_longer_paths() {
        let c = PlaneGraph::cycle(7);
        let d = c.find_dart(0, 1).unwrap();
        let p = BoundaryPath { start: d, len: 2 };
        let g = join_along_paths(&c, p, &c, p).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(face_lengths(&g), vec![7, 7, 10]);
    }

    #[test]
    fn identify_adjacent_is_loop() {
        let c = PlaneGraph::cycle(8);
        let p = BoundaryPath { start: c.find_dart(0, 1).unwrap(), len: 1 };
        let q = BoundaryPath { start: c.find_dart(2, 3).unwrap(), len: 1 };
        assert!(identify_path_pair(&c, p, q).is_err());
    }

    #[test]
    fn pinch_two_vertices_of_one_face() {
        // octagon, identify 0 with 4: two 4-faces sharing a cut vertex
        let c = PlaneGraph::cycle(8);
        let p = BoundaryPath { start: c.find_dart(0, 1).unwrap(), len: 0 };
        let q = BoundaryPath { start: c.find_dart(4, 5).unwrap(), len: 0 };
        let g = identify_path_pair(&c, p, q).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(face_lengths(&g), vec![4, 4, 8]);
    }

    #[test]
    fn split_degree_four_vertex() {
        // two 4-cycles sharing vertex 0
        let rot = vec![vec![1, 3, 4, 6], vec![2, 0], vec![3, 1], vec![0, 2], vec![5, 0], vec![6, 4], vec![0, 5]];
        let g = PlaneGraph::from_rotations(rot).unwrap();
        assert_eq!(split_vertex(&g, 0, 0, 2), Err(EmbedError::Disconnected));
        let h = split_vertex(&g, 0, 1, 2).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.degree(0), 2);
        assert_eq!(h.degree(7), 2);
    }
}
