//! Mutable combinatorial map used for rotation surgery. Edges carry ids so
//! that parallel edges can exist transiently; `finish` suppresses digon
//! faces and converts back to a validated `PlaneGraph`.

use super::{Dart, EmbedError, PlaneGraph};

/// A dart of the map: vertex plus index into its rotation.
pub(crate) type MDart = (u32, usize);

#[derive(Debug, Clone)]
pub(crate) struct Map {
    /// Counterclockwise edge ids around each vertex.
    pub rot: Vec<Vec<u32>>,
    pub ends: Vec<[u32; 2]>,
    pub alive_v: Vec<bool>,
    pub alive_e: Vec<bool>,
}

/// Dart in a map identified by its edge and the index of its tail in
/// `ends`, stable across vertex merges and splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct EdgeDart {
    pub edge: u32,
    pub end: u8,
}

impl Map {
    pub fn new() -> Self {
        Map { rot: Vec::new(), ends: Vec::new(), alive_v: Vec::new(), alive_e: Vec::new() }
    }

    /// Loads a plane graph; returns the map and, per dart of `g`, the
    /// corresponding edge id.
    pub fn from_graph(g: &PlaneGraph) -> (Map, Vec<u32>) {
        let mut m = Map::new();
        let dart_edge = m.add_graph(g);
        (m, dart_edge)
    }

    /// Adds a disjoint copy of `g`; vertex `v` of `g` becomes
    /// `v + vertex_offset`. Returns per-dart edge ids.
    pub fn add_graph(&mut self, g: &PlaneGraph) -> Vec<u32> {
        let vo = self.rot.len() as u32;
        let mut dart_edge = vec![u32::MAX; g.dart_count()];
        for d in 0..g.dart_count() as u32 {
            if dart_edge[d as usize] == u32::MAX {
                let e = self.ends.len() as u32;
                self.ends.push([g.tail(d) + vo, g.head(d) + vo]);
                self.alive_e.push(true);
                dart_edge[d as usize] = e;
                dart_edge[g.rev(d) as usize] = e;
            }
        }
        for v in 0..g.n() as u32 {
            let a = g.first_dart(v);
            self.rot.push((0..g.degree(v) as u32).map(|i| dart_edge[(a + i) as usize]).collect());
            self.alive_v.push(true);
        }
        dart_edge
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.rot.push(Vec::new());
        self.alive_v.push(true);
        (self.rot.len() - 1) as u32
    }

    pub fn other(&self, e: u32, v: u32) -> u32 {
        let [a, b] = self.ends[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn pos(&self, v: u32, e: u32) -> usize {
        self.rot[v as usize].iter().position(|&x| x == e).expect("edge not at vertex")
    }

    pub fn tail_of(&self, d: EdgeDart) -> u32 {
        self.ends[d.edge as usize][d.end as usize]
    }

    /// Face successor, same convention as `PlaneGraph::face_next`.
    pub fn face_next(&self, d: MDart) -> MDart {
        let e = self.rot[d.0 as usize][d.1];
        let w = self.other(e, d.0);
        let j = self.pos(w, e);
        let deg = self.rot[w as usize].len();
        (w, (j + deg - 1) % deg)
    }

    /// Adds an edge `u-v`, inserted at rotation index `iu` at `u` and `iv`
    /// at `v` (indices into the rotations before insertion; for `u == v`
    /// this is rejected).
    pub fn add_edge_at(&mut self, u: u32, iu: usize, v: u32, iv: usize) -> u32 {
        assert_ne!(u, v);
        let e = self.ends.len() as u32;
        self.ends.push([u, v]);
        self.alive_e.push(true);
        self.rot[u as usize].insert(iu, e);
        self.rot[v as usize].insert(iv, e);
        e
    }

    /// Inserts edge `u-v` placing it right after edge `after_u` at `u` and
    /// right after `after_v` at `v` (ccw). `None` appends.
    pub fn add_edge_after(&mut self, u: u32, after_u: Option<u32>, v: u32, after_v: Option<u32>) -> u32 {
        let iu = match after_u {
            Some(x) => self.pos(u, x) + 1,
            None => self.rot[u as usize].len(),
        };
        let iv = match after_v {
            Some(x) => self.pos(v, x) + 1,
            None => self.rot[v as usize].len(),
        };
        self.add_edge_at(u, iu, v, iv)
    }

    pub fn delete_edge(&mut self, e: u32) {
        let [a, b] = self.ends[e as usize];
        self.rot[a as usize].retain(|&x| x != e);
        self.rot[b as usize].retain(|&x| x != e);
        self.alive_e[e as usize] = false;
    }

    /// Merges `y` into `x`: `y`'s rotation, opened at the angle after its
    /// entry `ey`, is inserted into the angle after entry `ex` of `x`.
    pub fn splice(&mut self, x: u32, ex: u32, y: u32, ey: u32) -> Result<(), EmbedError> {
        if x == y {
            return Err(EmbedError::WouldCreateLoop);
        }
        let ix = self.pos(x, ex);
        let iy = self.pos(y, ey);
        let ry = std::mem::take(&mut self.rot[y as usize]);
        let rx = std::mem::take(&mut self.rot[x as usize]);
        let mut nr = Vec::with_capacity(rx.len() + ry.len());
        nr.extend_from_slice(&rx[..=ix]);
        nr.extend_from_slice(&ry[iy + 1..]);
        nr.extend_from_slice(&ry[..=iy]);
        nr.extend_from_slice(&rx[ix + 1..]);
        for &e in &ry {
            let en = &mut self.ends[e as usize];
            for k in 0..2 {
                if en[k] == y {
                    en[k] = x;
                }
            }
            if en[0] == en[1] {
                return Err(EmbedError::WouldCreateLoop);
            }
        }
        self.rot[x as usize] = nr;
        self.alive_v[y as usize] = false;
        Ok(())
    }

    /// Splits vertex `v`: entries `[start, start+len)` (cyclically) move to a
    /// new vertex, which is returned.
    pub fn split_off(&mut self, v: u32, start: usize, len: usize) -> u32 {
        let r = std::mem::take(&mut self.rot[v as usize]);
        let deg = r.len();
        let moved: Vec<u32> = (0..len).map(|k| r[(start + k) % deg]).collect();
        let kept: Vec<u32> = (len..deg).map(|k| r[(start + k) % deg]).collect();
        let w = self.add_vertex();
        for &e in &moved {
            let en = &mut self.ends[e as usize];
            for k in 0..2 {
                if en[k] == v {
                    en[k] = w;
                }
            }
        }
        self.rot[v as usize] = kept;
        self.rot[w as usize] = moved;
        w
    }

    /// Subdivides edge `e`; the new vertex is returned. The two halves keep
    /// the edge's place in both rotations; the half at `ends[e][0]` keeps id `e`.
    pub fn subdivide(&mut self, e: u32) -> (u32, u32) {
        let [a, b] = self.ends[e as usize];
        let w = self.add_vertex();
        let e2 = self.ends.len() as u32;
        self.ends.push([w, b]);
        self.alive_e.push(true);
        self.ends[e as usize] = [a, w];
        let pb = self.pos(b, e);
        self.rot[b as usize][pb] = e2;
        // at w: towards b, then towards a (degree two, order is irrelevant)
        self.rot[w as usize] = vec![e2, e];
        (w, e2)
    }

    /// Removes one edge of every digon face until none remain.
    fn suppress_digons(&mut self) -> Result<(), EmbedError> {
        loop {
            let mut found = None;
            'outer: for v in 0..self.rot.len() {
                if !self.alive_v[v] {
                    continue;
                }
                for i in 0..self.rot[v].len() {
                    let d = (v as u32, i);
                    let d2 = self.face_next(d);
                    if self.face_next(d2) == d {
                        let (e1, e2) = (self.rot[v][i], self.rot[d2.0 as usize][d2.1]);
                        if e1 != e2 {
                            found = Some(e1.max(e2));
                            break 'outer;
                        }
                    }
                }
            }
            match found {
                Some(e) => self.delete_edge(e),
                None => return Ok(()),
            }
        }
    }

    /// Validates, compacts and converts into a plane graph. `markers` are
    /// translated into darts of the result.
    pub fn finish(mut self, markers: &[EdgeDart]) -> Result<(PlaneGraph, Vec<Dart>), EmbedError> {
        for (e, en) in self.ends.iter().enumerate() {
            if self.alive_e[e] && en[0] == en[1] {
                return Err(EmbedError::WouldCreateLoop);
            }
        }
        self.suppress_digons()?;
        let mut newid = vec![u32::MAX; self.rot.len()];
        let mut k = 0u32;
        for v in 0..self.rot.len() {
            if self.alive_v[v] {
                newid[v] = k;
                k += 1;
            }
        }
        let mut rot = Vec::with_capacity(k as usize);
        for v in 0..self.rot.len() {
            if !self.alive_v[v] {
                continue;
            }
            let r: Vec<u32> = self.rot[v].iter().map(|&e| newid[self.other(e, v as u32) as usize]).collect();
            for (i, w) in r.iter().enumerate() {
                if r[..i].contains(w) {
                    return Err(EmbedError::NonSimpleResult);
                }
            }
            rot.push(r);
        }
        let g = PlaneGraph::from_rotations(rot)?;
        let mut out = Vec::with_capacity(markers.len());
        for mk in markers {
            if !self.alive_e[mk.edge as usize] {
                return Err(EmbedError::EmbeddingBroken("marker edge was suppressed".into()));
            }
            let [a, b] = self.ends[mk.edge as usize];
            let (u, w) = if mk.end == 0 { (newid[a as usize], newid[b as usize]) } else { (newid[b as usize], newid[a as usize]) };
            out.push(g.find_dart(u, w).ok_or_else(|| EmbedError::EmbeddingBroken("marker lost".into()))?);
        }
        Ok((g, out))
    }
}
