//! Plane-graph kernel: rotation systems, face tracing, marked faces,
//! structural queries and canonical keys.

mod canon;
mod edit;
pub(crate) mod map;
mod query;
pub mod rotg;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_key, key_digest, IsoGroup, KeyDigest};
pub(crate) use edit::{edge_dart_of, path_edge_darts, zip_paths};
pub use edit::{add_face_path, identify_path_pair, join_along_paths, split_vertex, subdivide, suppress_degree2, BoundaryPath};
pub use query::{
    boundary_distance, distance, girth_ok, has_adjacent_degree2, has_short_cycle, has_shortcut,
    is_two_connected, is_two_edge_connected, max_internal_face, short_cycles, Cycle,
};

/// A dart is a directed edge, identified by its index in the flattened
/// rotation table.
pub type Dart = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {0} is listed as its own neighbor")]
    SelfLoop(u32),
    #[error("vertex {0} lists neighbor {1} more than once")]
    RepeatedNeighbor(u32, u32),
    #[error("neighbor id {1} of vertex {0} is out of range")]
    BadVertex(u32, u32),
    #[error("edge {0}-{1} is not listed at both endpoints")]
    Asymmetric(u32, u32),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not a sphere embedding: V - E + F = {0}")]
    EulerViolation(i64),
    #[error("operation would create a loop")]
    WouldCreateLoop,
    #[error("operation would create a parallel edge")]
    WouldCreateParallel,
    #[error("parallel edges that do not bound a digon cannot be suppressed")]
    NonSimpleResult,
    #[error("embedding broken: {0}")]
    EmbeddingBroken(String),
    #[error("invalid mark: {0}")]
    BadMark(String),
    #[error("no such edge {0}-{1}")]
    NoSuchEdge(u32, u32),
}

/// A connected simple graph embedded in the sphere, stored as a rotation
/// system. Neighbors of every vertex are listed counterclockwise.
///
/// Darts leaving vertex `v` occupy `off[v]..off[v + 1]`. The face to the
/// left of dart `u -> v` continues with `v -> w` where `w` precedes `u` in
/// the rotation at `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    off: Vec<u32>,
    nbr: Vec<u32>,
    rev: Vec<u32>,
    tail: Vec<u32>,
    face_of: Vec<u32>,
    face_off: Vec<u32>,
    face_darts: Vec<u32>,
}

impl fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneGraph(n={}, m={}; ", self.n(), self.m())?;
        for v in 0..self.n() as u32 {
            write!(f, "{}:{:?} ", v, self.neighbors(v))?;
        }
        write!(f, ")")
    }
}

/// One boundary walk of a face, as a cyclic dart sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

impl PlaneGraph {
    /// Builds a plane graph from counterclockwise rotations, checking
    /// simplicity, symmetry, connectivity and Euler's formula.
    pub fn from_rotations(rot: Vec<Vec<u32>>) -> Result<Self, EmbedError> {
        let n = rot.len();
        if n == 0 {
            return Err(EmbedError::Empty);
        }
        let mut off = Vec::with_capacity(n + 1);
        let mut nbr = Vec::new();
        off.push(0u32);
        for (v, r) in rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                if w as usize >= n {
                    return Err(EmbedError::BadVertex(v as u32, w));
                }
                if w as usize == v {
                    return Err(EmbedError::SelfLoop(w));
                }
                if r[..i].contains(&w) {
                    return Err(EmbedError::RepeatedNeighbor(v as u32, w));
                }
                nbr.push(w);
            }
            off.push(nbr.len() as u32);
        }
        let mut tail = vec![0u32; nbr.len()];
        for v in 0..n {
            for d in off[v]..off[v + 1] {
                tail[d as usize] = v as u32;
            }
        }
        let mut rev = vec![0u32; nbr.len()];
        for d in 0..nbr.len() {
            let (u, v) = (tail[d], nbr[d]);
            let (a, b) = (off[v as usize] as usize, off[v as usize + 1] as usize);
            match nbr[a..b].iter().position(|&x| x == u) {
                Some(p) => rev[d] = (a + p) as u32,
                None => return Err(EmbedError::Asymmetric(u, v)),
            }
        }
        let mut g = PlaneGraph { off, nbr, rev, tail, face_of: Vec::new(), face_off: Vec::new(), face_darts: Vec::new() };
        if !g.is_connected() {
            return Err(EmbedError::Disconnected);
        }
        g.trace();
        let euler = g.n() as i64 - g.m() as i64 + g.face_count() as i64;
        if euler != 2 {
            return Err(EmbedError::EulerViolation(euler));
        }
        Ok(g)
    }

    /// The cycle `0 1 ... n-1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let rot = (0..n).map(|v| vec![((v + 1) % n) as u32, ((v + n - 1) % n) as u32]).collect();
        PlaneGraph::from_rotations(rot).expect("cycle is a valid plane graph")
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn trace(&mut self) {
        let nd = self.nbr.len();
        let mut face_of = vec![u32::MAX; nd];
        let mut face_off = vec![0u32];
        let mut face_darts = Vec::with_capacity(nd);
        for start in 0..nd as u32 {
            if face_of[start as usize] != u32::MAX {
                continue;
            }
            let f = (face_off.len() - 1) as u32;
            let mut d = start;
            loop {
                face_of[d as usize] = f;
                face_darts.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            face_off.push(face_darts.len() as u32);
        }
        self.face_of = face_of;
        self.face_off = face_off;
        self.face_darts = face_darts;
    }

    pub fn n(&self) -> usize {
        self.off.len() - 1
    }

    pub fn m(&self) -> usize {
        self.nbr.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.nbr.len()
    }

    pub fn degree(&self, v: u32) -> usize {
        (self.off[v as usize + 1] - self.off[v as usize]) as usize
    }

    /// Counterclockwise rotation at `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.nbr[self.off[v as usize] as usize..self.off[v as usize + 1] as usize]
    }

    pub fn first_dart(&self, v: u32) -> Dart {
        self.off[v as usize]
    }

    pub fn head(&self, d: Dart) -> u32 {
        self.nbr[d as usize]
    }

    pub fn tail(&self, d: Dart) -> u32 {
        self.tail[d as usize]
    }

    pub fn rev(&self, d: Dart) -> Dart {
        self.rev[d as usize]
    }

    /// Next dart counterclockwise around the tail of `d`.
    pub fn rot_next(&self, d: Dart) -> Dart {
        let v = self.tail[d as usize] as usize;
        if d + 1 == self.off[v + 1] {
            self.off[v]
        } else {
            d + 1
        }
    }

    /// Previous dart counterclockwise (next clockwise) around the tail of `d`.
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let v = self.tail[d as usize] as usize;
        if d == self.off[v] {
            self.off[v + 1] - 1
        } else {
            d - 1
        }
    }

    /// Successor of `d` along the face to its left.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_prev(self.rev[d as usize])
    }

    pub fn find_dart(&self, u: u32, v: u32) -> Option<Dart> {
        if u as usize >= self.n() {
            return None;
        }
        let a = self.off[u as usize];
        self.neighbors(u).iter().position(|&w| w == v).map(|p| a + p as u32)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.find_dart(u, v).is_some()
    }

    pub fn face_count(&self) -> usize {
        if self.m() == 0 {
            1
        } else {
            self.face_off.len() - 1
        }
    }

    pub fn face_of(&self, d: Dart) -> u32 {
        self.face_of[d as usize]
    }

    /// Darts of face `f` in walk order.
    pub fn face_darts(&self, f: u32) -> &[Dart] {
        &self.face_darts[self.face_off[f as usize] as usize..self.face_off[f as usize + 1] as usize]
    }

    pub fn face_len(&self, f: u32) -> usize {
        (self.face_off[f as usize + 1] - self.face_off[f as usize]) as usize
    }

    /// Vertices met along face `f` in walk order (tails of its darts).
    pub fn face_vertices(&self, f: u32) -> Vec<u32> {
        self.face_darts(f).iter().map(|&d| self.tail(d)).collect()
    }

    /// Whether the boundary walk of `f` visits every vertex at most once.
    pub fn face_is_cycle(&self, f: u32) -> bool {
        let vs = self.face_vertices(f);
        let mut s = vs.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == vs.len() && vs.len() >= 3
    }

    /// Face walk starting at dart `d`.
    pub fn walk_from(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut e = self.face_next(d);
        while e != d {
            out.push(e);
            e = self.face_next(e);
        }
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.nbr.len() as u32).filter(move |&d| self.tail(d) < self.head(d)).map(move |d| (self.tail(d), self.head(d)))
    }

    pub fn rotations(&self) -> Vec<Vec<u32>> {
        (0..self.n() as u32).map(|v| self.neighbors(v).to_vec()).collect()
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = (0..self.n() as u32)
            .map(|v| {
                let mut r = self.neighbors(v).to_vec();
                r.reverse();
                r
            })
            .collect();
        PlaneGraph::from_rotations(rot).expect("mirror of a plane graph is plane")
    }
}

/// Precise role of a marked (precolored) part of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    B,
    C1,
    C2,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::B => "B",
            Role::C1 => "C1",
            Role::C2 => "C2",
        }
    }
}

/// A marked face, stored as one dart of its walk, or a single marked vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkSite {
    Face(Dart),
    Vertex(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mark {
    pub role: Role,
    pub site: MarkSite,
}

/// A plane graph with either one marked outer face `B` (disk) or a pair of
/// boundaries `C1`, `C2` (cylinder).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPlaneGraph {
    graph: PlaneGraph,
    marks: Vec<Mark>,
}

impl MarkedPlaneGraph {
    pub fn new(graph: PlaneGraph, marks: Vec<Mark>) -> Result<Self, EmbedError> {
        let roles: Vec<Role> = marks.iter().map(|m| m.role).collect();
        match roles.as_slice() {
            [Role::B] | [Role::C1, Role::C2] => {}
            _ => return Err(EmbedError::BadMark(format!("unsupported role set {roles:?}"))),
        }
        let mut norm = Vec::with_capacity(marks.len());
        for mk in marks {
            let site = match mk.site {
                MarkSite::Face(d) => {
                    if d as usize >= graph.dart_count() {
                        return Err(EmbedError::BadMark(format!("dart {d} out of range")));
                    }
                    let f = graph.face_of(d);
                    if !graph.face_is_cycle(f) {
                        return Err(EmbedError::BadMark(format!("face of {} is not a cycle", mk.role.as_str())));
                    }
                    if mk.role != Role::B && graph.face_len(f) > 4 {
                        return Err(EmbedError::BadMark(format!("boundary {} longer than 4", mk.role.as_str())));
                    }
                    MarkSite::Face(*graph.face_darts(f).iter().min().unwrap())
                }
                MarkSite::Vertex(v) => {
                    if mk.role == Role::B {
                        return Err(EmbedError::BadMark("outer face cannot be a vertex".into()));
                    }
                    if v as usize >= graph.n() {
                        return Err(EmbedError::BadMark(format!("vertex {v} out of range")));
                    }
                    MarkSite::Vertex(v)
                }
            };
            norm.push(Mark { role: mk.role, site });
        }
        if norm.len() == 2 && norm[0].site == norm[1].site {
            return Err(EmbedError::BadMark("boundaries must be distinct".into()));
        }
        Ok(MarkedPlaneGraph { graph, marks: norm })
    }

    /// Disk graph with outer face containing dart `d`.
    pub fn disk(graph: PlaneGraph, d: Dart) -> Result<Self, EmbedError> {
        Self::new(graph, vec![Mark { role: Role::B, site: MarkSite::Face(d) }])
    }

    pub fn cylinder(graph: PlaneGraph, c1: MarkSite, c2: MarkSite) -> Result<Self, EmbedError> {
        Self::new(graph, vec![Mark { role: Role::C1, site: c1 }, Mark { role: Role::C2, site: c2 }])
    }

    /// The bare cycle of length `n` with one face marked.
    pub fn bare_cycle(n: usize) -> Self {
        let g = PlaneGraph::cycle(n);
        let d = g.find_dart(0, 1).unwrap();
        Self::disk(g, d).unwrap()
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn is_disk(&self) -> bool {
        self.marks.len() == 1
    }

    pub fn is_cylinder(&self) -> bool {
        self.marks.len() == 2
    }

    pub fn into_parts(self) -> (PlaneGraph, Vec<Mark>) {
        (self.graph, self.marks)
    }

    /// Outer face dart of a disk graph.
    pub fn outer_dart(&self) -> Dart {
        match self.marks[0].site {
            MarkSite::Face(d) => d,
            MarkSite::Vertex(_) => panic!("outer mark is a vertex"),
        }
    }

    /// Vertices of mark `i`, in walk order for faces.
    pub fn mark_vertices(&self, i: usize) -> Vec<u32> {
        match self.marks[i].site {
            MarkSite::Face(d) => self.graph.face_vertices(self.graph.face_of(d)),
            MarkSite::Vertex(v) => vec![v],
        }
    }

    /// Edges of mark `i` (empty for a vertex mark), each as `(min, max)`.
    pub fn mark_edges(&self, i: usize) -> Vec<(u32, u32)> {
        let vs = self.mark_vertices(i);
        if vs.len() < 2 {
            return Vec::new();
        }
        (0..vs.len())
            .map(|k| {
                let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Length of mark `i` (0 for a vertex mark).
    pub fn mark_len(&self, i: usize) -> usize {
        match self.marks[i].site {
            MarkSite::Face(d) => self.graph.face_len(self.graph.face_of(d)),
            MarkSite::Vertex(_) => 0,
        }
    }

    pub fn mark_face(&self, i: usize) -> Option<u32> {
        match self.marks[i].site {
            MarkSite::Face(d) => Some(self.graph.face_of(d)),
            MarkSite::Vertex(_) => None,
        }
    }

    /// Union of marked vertices, deduplicated, in mark order.
    pub fn marked_vertices(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for i in 0..self.marks.len() {
            for v in self.mark_vertices(i) {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Whether the graph consists only of its marks.
    pub fn is_trivial(&self) -> bool {
        let mut es: Vec<(u32, u32)> = (0..self.marks.len()).flat_map(|i| self.mark_edges(i)).collect();
        es.sort_unstable();
        es.dedup();
        es.len() == self.graph.m() && self.marked_vertices().len() == self.graph.n()
    }

    /// Same graph with the two boundaries swapped.
    pub fn swapped(&self) -> MarkedPlaneGraph {
        assert!(self.is_cylinder());
        MarkedPlaneGraph::cylinder(self.graph.clone(), self.marks[1].site, self.marks[0].site).unwrap()
    }

    /// Mirror image, with marks carried over.
    pub fn mirror(&self) -> MarkedPlaneGraph {
        let g = self.graph.mirror();
        let marks = self
            .marks
            .iter()
            .map(|m| {
                let site = match m.site {
                    MarkSite::Face(d) => {
                        let (u, v) = (self.graph.tail(d), self.graph.head(d));
                        MarkSite::Face(g.find_dart(v, u).unwrap())
                    }
                    MarkSite::Vertex(v) => MarkSite::Vertex(v),
                };
                Mark { role: m.role, site }
            })
            .collect();
        MarkedPlaneGraph::new(g, marks).unwrap()
    }
}

/// Traces all faces of `g`.
pub fn trace_faces(g: &PlaneGraph) -> Vec<FaceWalk> {
    (0..g.face_off.len() as u32 - 1).map(|f| FaceWalk { darts: g.face_darts(f).to_vec() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = trace_faces(g).iter().map(|w| w.len()).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn five_cycle_has_two_faces() {
        assert_eq!(lengths(&PlaneGraph::cycle(5)), vec![5, 5]);
    }

    #[test]
    fn two_pentagons_sharing_edge() {
        // outer 8-cycle 0..7 with chord 0-4
        let mut rot: Vec<Vec<u32>> = (0..8u32).map(|v| vec![(v + 1) % 8, (v + 7) % 8]).collect();
        rot[0] = vec![1, 4, 7];
        rot[4] = vec![5, 0, 3];
        let g = PlaneGraph::from_rotations(rot).unwrap();
        assert_eq!(lengths(&g), vec![5, 5, 8]);
        assert_eq!(g.m(), 9);
    }

    #[test]
    fn path_has_one_face() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(lengths(&g), vec![4]);
    }

    #[test]
    fn euler_violation_detected() {
        // K4 drawn with a bad rotation at one vertex is toroidal
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::from_rotations(rot), Err(EmbedError::EulerViolation(_))));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(PlaneGraph::from_rotations(vec![vec![0]]), Err(EmbedError::SelfLoop(0)));
        assert_eq!(PlaneGraph::from_rotations(vec![vec![1], vec![]]), Err(EmbedError::Asymmetric(0, 1)));
        assert_eq!(PlaneGraph::from_rotations(vec![vec![], vec![]]), Err(EmbedError::Disconnected));
        assert_eq!(PlaneGraph::from_rotations(vec![vec![1, 1], vec![0, 0]]), Err(EmbedError::RepeatedNeighbor(0, 1)));
    }

    #[test]
    fn darts_cover_each_face_once() {
        let g = PlaneGraph::cycle(7);
        let total: usize = trace_faces(&g).iter().map(|w| w.len()).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn mirror_reverses_mark_walk() {
        let mg = MarkedPlaneGraph::bare_cycle(6);
        let mm = mg.mirror();
        assert_eq!(mm.mark_len(0), 6);
        assert_eq!(mm.mirror().graph(), mg.graph());
    }

    #[test]
    fn trivial_detection() {
        assert!(MarkedPlaneGraph::bare_cycle(5).is_trivial());
    }
}
