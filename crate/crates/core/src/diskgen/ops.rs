//! Generating operations on disk graphs. Paths are given by their first
//! dart on the outer walk and always run with the outer face on their left.

use crate::embed::map::Map;
use crate::embed::{
    edge_dart_of, path_edge_darts, subdivide, zip_paths, BoundaryPath, Dart, EmbedError, MarkedPlaneGraph, PlaneGraph,
};

fn insert_after(r: &mut Vec<u32>, after: u32, x: u32) {
    let p = r.iter().position(|&w| w == after).expect("neighbor missing from rotation");
    r.insert(p + 1, x);
}

fn on_outer(mg: &MarkedPlaneGraph, d: Dart) -> bool {
    let g = mg.graph();
    g.face_of(d) == g.face_of(mg.outer_dart())
}

/// Darts of the outer walk, starting at the stored outer dart.
pub fn outer_walk(mg: &MarkedPlaneGraph) -> Vec<Dart> {
    mg.graph().walk_from(mg.outer_dart())
}

/// Glues two disk graphs along outer paths of length `t` starting at
/// `d1` and `d2`; the outer faces merge and parallel edges are suppressed.
pub fn op_u(g1: &MarkedPlaneGraph, d1: Dart, g2: &MarkedPlaneGraph, d2: Dart, t: usize) -> Result<MarkedPlaneGraph, EmbedError> {
    debug_assert!(on_outer(g1, d1) && on_outer(g2, d2));
    let (a, b) = (g1.graph(), g2.graph());
    let (mut m, de1) = Map::from_graph(a);
    let de2 = m.add_graph(b);
    let (pe, pn) = path_edge_darts(a, &de1, BoundaryPath { start: d1, len: t });
    let (qe, qn) = path_edge_darts(b, &de2, BoundaryPath { start: d2, len: t });
    zip_paths(&mut m, &pe, pn, &qe, qn)?;
    // the dart after the first path stays on the merged outer face
    let (g, ds) = m.finish(&[pn])?;
    MarkedPlaneGraph::disk(g, ds[0])
}

/// Subdivides the outer edge of dart `d`.
pub fn op_s(mg: &MarkedPlaneGraph, d: Dart) -> Result<MarkedPlaneGraph, EmbedError> {
    debug_assert!(on_outer(mg, d));
    let g = mg.graph();
    let (u, v) = (g.tail(d), g.head(d));
    let h = subdivide(g, u, v)?;
    let od = h.find_dart(u, g.n() as u32).expect("subdivision vertex adjacent to u");
    MarkedPlaneGraph::disk(h, od)
}

/// Replaces the outer path `v0 w1 w2 w3 v4` starting at `d` by a new path
/// `v0 v1 v2 v3 v4` with `v2` joined to `w2`.
pub fn op_j(mg: &MarkedPlaneGraph, d: Dart) -> Result<MarkedPlaneGraph, EmbedError> {
    debug_assert!(on_outer(mg, d));
    let g = mg.graph();
    let p = BoundaryPath { start: d, len: 4 };
    let darts = p.darts(g);
    let w = p.vertices(g);
    let after_v4 = g.head(g.face_next(darts[3]));
    let n = g.n() as u32;
    let (v1, v2, v3) = (n, n + 1, n + 2);
    let mut rot = g.rotations();
    // a new edge enters the outer face right after the outgoing outer dart
    insert_after(&mut rot[w[0] as usize], w[1], v1);
    insert_after(&mut rot[w[2] as usize], w[3], v2);
    insert_after(&mut rot[w[4] as usize], after_v4, v3);
    rot.push(vec![w[0], v2]);
    rot.push(vec![v1, w[2], v3]);
    rot.push(vec![v2, w[4]]);
    let h = PlaneGraph::from_rotations(rot)?;
    let od = h.find_dart(w[0], v1).unwrap();
    MarkedPlaneGraph::disk(h, od)
}

/// Degree of the middle vertex of the outer path starting at `d`.
pub fn middle_degree(mg: &MarkedPlaneGraph, d: Dart) -> usize {
    let g = mg.graph();
    g.degree(g.head(g.face_next(d)))
}

/// Splits the middle vertex `u2` of the outer path `u0 u1 u2 u3 u4`
/// starting at `d`, the first `split - 1` neighbors (counterclockwise from
/// `u1`) staying with `u2`, and adds the path `u0 x1 .. x_{4+extra} u4`
/// with `x2` joined to `u2` and `x_{3+extra}` to the new vertex.
/// `split` ranges over `2..=deg(u2)` and `extra` over `0..=1`.
pub fn op_x(mg: &MarkedPlaneGraph, d: Dart, split: usize, extra: usize) -> Result<MarkedPlaneGraph, EmbedError> {
    debug_assert!(on_outer(mg, d));
    assert!(extra <= 1);
    let g = mg.graph();
    let p = BoundaryPath { start: d, len: 4 };
    let darts = p.darts(g);
    let u = p.vertices(g);
    let after_u4 = g.head(g.face_next(darts[3]));
    let r = g.neighbors(u[2]);
    let k = r.len();
    assert!((2..=k).contains(&split), "split index out of range");
    let p1 = r.iter().position(|&w| w == u[1]).unwrap();
    let ys: Vec<u32> = (0..k).map(|t| r[(p1 + t) % k]).collect();
    debug_assert_eq!(ys[k - 1], u[3]);

    let n = g.n() as u32;
    let u2b = n;
    let len = 4 + extra as u32;
    let x = |t: u32| n + t; // x_1 .. x_len
    let mut rot = g.rotations();
    let mut first: Vec<u32> = ys[..split - 1].to_vec();
    first.push(x(2));
    rot[u[2] as usize] = first;
    for &y in &ys[split - 1..] {
        for w in rot[y as usize].iter_mut() {
            if *w == u[2] {
                *w = u2b;
            }
        }
    }
    insert_after(&mut rot[u[0] as usize], u[1], x(1));
    insert_after(&mut rot[u[4] as usize], after_u4, x(len));
    let mut second: Vec<u32> = ys[split - 1..].to_vec();
    second.push(x(3 + extra as u32));
    rot.push(second);
    for t in 1..=len {
        let prev = if t == 1 { u[0] } else { x(t - 1) };
        let next = if t == len { u[4] } else { x(t + 1) };
        if t == 2 {
            rot.push(vec![prev, u[2], next]);
        } else if t == 3 + extra as u32 {
            rot.push(vec![prev, u2b, next]);
        } else {
            rot.push(vec![prev, next]);
        }
    }
    let h = PlaneGraph::from_rotations(rot)?;
    let od = h.find_dart(u[0], x(1)).unwrap();
    MarkedPlaneGraph::disk(h, od)
}

/// One filled face: the face of `face_dart` receives `graph`, whose outer
/// walk is read from its `offset`-th dart.
#[derive(Debug, Clone, Copy)]
pub struct Fill<'a> {
    pub face_dart: Dart,
    pub graph: &'a MarkedPlaneGraph,
    pub offset: usize,
}

/// Pastes disk graphs into internal faces of `mg`. Each face is
/// identified with the outer cycle of its filling; the outer face of
/// `mg` is kept.
pub fn paste(mg: &MarkedPlaneGraph, fills: &[Fill<'_>]) -> Result<MarkedPlaneGraph, EmbedError> {
    let g = mg.graph();
    let (mut m, de) = Map::from_graph(g);
    let outer = edge_dart_of(g, &de, mg.outer_dart());
    for f in fills {
        let h = f.graph.graph();
        let l = g.face_len(g.face_of(f.face_dart));
        if f.graph.mark_len(0) != l {
            return Err(EmbedError::EmbeddingBroken("filling does not match the face length".into()));
        }
        let hw = outer_walk(f.graph);
        let dh = m.add_graph(h);
        let (pe, pn) = path_edge_darts(g, &de, BoundaryPath { start: f.face_dart, len: l - 1 });
        let (qe, qn) = path_edge_darts(h, &dh, BoundaryPath { start: hw[f.offset % l], len: l - 1 });
        zip_paths(&mut m, &pe, pn, &qe, qn)?;
    }
    let (r, ds) = m.finish(&[outer])?;
    MarkedPlaneGraph::disk(r, ds[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{has_short_cycle, max_internal_face};

    fn face_lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = (0..g.face_count() as u32).map(|f| g.face_len(f)).collect();
        l.sort_unstable();
        l
    }

    fn double_pentagon() -> MarkedPlaneGraph {
        let c = MarkedPlaneGraph::bare_cycle(5);
        op_u(&c, c.outer_dart(), &c, c.outer_dart(), 1).unwrap()
    }

    #[test]
    fn u_of_two_pentagons() {
        let g = double_pentagon();
        assert_eq!(g.mark_len(0), 8);
        assert_eq!(g.graph().n(), 8);
        assert_eq!(face_lengths(g.graph()), vec![5, 5, 8]);
    }

    #[test]
    fn u_along_longer_paths() {
        let c = MarkedPlaneGraph::bare_cycle(9);
        let g = op_u(&c, c.outer_dart(), &c, c.outer_dart(), 4).unwrap();
        assert_eq!(g.mark_len(0), 10);
        assert_eq!(face_lengths(g.graph()), vec![9, 9, 10]);
    }

    #[test]
    fn s_grows_the_outer_face() {
        let c = MarkedPlaneGraph::bare_cycle(5);
        let g = op_s(&c, c.outer_dart()).unwrap();
        assert_eq!(g.mark_len(0), 6);
        let h = op_s(&g, g.outer_dart()).unwrap();
        assert_eq!(h.mark_len(0), 7);
        assert!(crate::embed::has_adjacent_degree2(h.graph()));
    }

    #[test]
    fn j_on_octagon() {
        let c = MarkedPlaneGraph::bare_cycle(8);
        let g = op_j(&c, c.outer_dart()).unwrap();
        assert_eq!(g.graph().n(), 11);
        assert_eq!(g.mark_len(0), 8);
        assert_eq!(face_lengths(g.graph()), vec![5, 5, 8, 8]);
        assert!(!has_short_cycle(g.graph(), 4));
    }

    #[test]
    fn x_lengths_on_double_pentagon() {
        let g = double_pentagon();
        let w = outer_walk(&g);
        for extra in 0..=1 {
            for &d in &w {
                for split in 2..=middle_degree(&g, d) {
                    let h = op_x(&g, d, split, extra).unwrap();
                    assert_eq!(h.mark_len(0), 8 + extra + 1);
                    assert_eq!(h.graph().n(), 8 + 4 + extra + 1);
                    assert!(max_internal_face(&h) <= 5 + extra + 3);
                }
            }
        }
    }

    #[test]
    fn paste_into_a_face() {
        // an octagon face of U(C_8 .. ) receives the double pentagon
        let c8 = MarkedPlaneGraph::bare_cycle(8);
        let c5 = MarkedPlaneGraph::bare_cycle(5);
        let g = op_u(&c8, c8.outer_dart(), &c5, c5.outer_dart(), 1).unwrap();
        assert_eq!(g.mark_len(0), 11);
        let gg = g.graph();
        let inner8 = (0..gg.face_count() as u32).find(|&f| gg.face_len(f) == 8 && Some(f) != g.mark_face(0)).unwrap();
        let h = double_pentagon();
        for offset in 0..8 {
            let r = paste(&g, &[Fill { face_dart: gg.face_darts(inner8)[0], graph: &h, offset }]).unwrap();
            assert_eq!(r.mark_len(0), 11);
            // the filling adds a chord and no vertices
            assert_eq!(r.graph().n(), g.graph().n());
            assert_eq!(r.graph().m(), g.graph().m() + 1);
            assert_eq!(face_lengths(r.graph()), vec![5, 5, 5, 11]);
        }
    }
}
