//! Structural predicates on disk graphs: the four reducible
//! configurations every nontrivial critical member must contain, the size
//! bounds, and the filter flags recorded in catalog metadata.

use crate::embed::{has_adjacent_degree2, has_shortcut, max_internal_face, MarkedPlaneGraph};

/// Which configuration a disk graph contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Configuration {
    /// A shortcut of length at most 4.
    Shortcut,
    /// Two adjacent degree-2 vertices on the outer face.
    AdjacentDegree2,
    /// An outer path `v0..v4` with a 4-chord `v0 w1 w2 w3 v4` and `v2 w2` an edge.
    Ladder,
    /// A 4-chord closing a face against the outer cycle, flanked by two
    /// 5-faces that each meet the outer cycle in three vertices.
    FlankedFace,
}

fn outer_position(mg: &MarkedPlaneGraph) -> (Vec<u32>, Vec<usize>) {
    let b = mg.mark_vertices(0);
    let mut pos = vec![usize::MAX; mg.graph().n()];
    for (i, &v) in b.iter().enumerate() {
        pos[v as usize] = i;
    }
    (b, pos)
}

fn has_ladder(mg: &MarkedPlaneGraph) -> bool {
    let g = mg.graph();
    let (b, pos) = outer_position(mg);
    let l = b.len();
    let inner = |v: u32| pos[v as usize] == usize::MAX;
    for s in 0..l {
        let v: Vec<u32> = (0..5).map(|k| b[(s + k) % l]).collect();
        for &w2 in g.neighbors(v[2]).iter().filter(|&&w| inner(w)) {
            let w1s: Vec<u32> = g.neighbors(v[0]).iter().copied().filter(|&w| inner(w) && w != w2 && g.has_edge(w, w2)).collect();
            let w3s = g.neighbors(v[4]).iter().copied().filter(|&w| inner(w) && w != w2 && g.has_edge(w, w2));
            for w3 in w3s {
                if w1s.iter().any(|&w1| w1 != w3) {
                    return true;
                }
            }
        }
    }
    false
}

fn has_flanked_face(mg: &MarkedPlaneGraph) -> bool {
    let g = mg.graph();
    let outer = mg.mark_face(0).unwrap();
    let (_, pos) = outer_position(mg);
    let on_b = |v: u32| pos[v as usize] != usize::MAX;
    for f in 0..g.face_count() as u32 {
        if f == outer {
            continue;
        }
        let ds = g.face_darts(f);
        let vs: Vec<u32> = ds.iter().map(|&d| g.tail(d)).collect();
        let k = vs.len();
        let inner: Vec<usize> = (0..k).filter(|&i| !on_b(vs[i])).collect();
        // the face is the 4-chord w0..w4 plus an arc of the outer cycle
        if inner.len() != 3 {
            continue;
        }
        let Some(s) = (0..k).find(|&i| on_b(vs[i]) && !on_b(vs[(i + 1) % k])) else { continue };
        if (1..=3).any(|t| on_b(vs[(s + t) % k])) || !on_b(vs[(s + 4) % k]) {
            continue;
        }
        // the rest of the walk must run along outer edges
        let arc_ok = (4..k).all(|t| {
            let d = ds[(s + t) % k];
            g.face_of(g.rev(d)) == outer
        });
        if !arc_ok {
            continue;
        }
        let w: Vec<u32> = (0..5).map(|t| vs[(s + t) % k]).collect();
        let flank = |d: u32| {
            let of = g.face_of(g.rev(d));
            if g.face_len(of) != 5 {
                return false;
            }
            let fv = g.face_vertices(of);
            let on = fv.iter().filter(|&&v| on_b(v)).count();
            let common = fv.iter().filter(|v| vs.contains(v)).count();
            on == 3 && common == 2
        };
        // darts w0->w1 and w3->w4 of this face; flanks lie across them
        if flank(ds[s]) && flank(ds[(s + 3) % k]) {
            debug_assert_eq!(g.tail(ds[s]), w[0]);
            return true;
        }
    }
    false
}

/// The first configuration found, in the order shortcut, adjacent
/// degree-2 pair, ladder, flanked face.
pub fn configuration(mg: &MarkedPlaneGraph) -> Option<Configuration> {
    if has_shortcut(mg, 4) {
        Some(Configuration::Shortcut)
    } else if has_adjacent_degree2(mg.graph()) {
        Some(Configuration::AdjacentDegree2)
    } else if has_ladder(mg) {
        Some(Configuration::Ladder)
    } else if has_flanked_face(mg) {
        Some(Configuration::FlankedFace)
    } else {
        None
    }
}

/// Size and face-length bounds for nontrivial critical disk graphs:
/// internal faces at most `l - 3`, and for `l >= 10` at most `18l - 160`
/// edges and `(37l - 320) / 3` vertices.
pub fn within_bounds(mg: &MarkedPlaneGraph) -> bool {
    let l = mg.mark_len(0) as i64;
    let g = mg.graph();
    if (max_internal_face(mg) as i64) > l - 3 {
        return false;
    }
    if l >= 10 && ((g.m() as i64) > 18 * l - 160 || 3 * (g.n() as i64) > 37 * l - 320) {
        return false;
    }
    true
}

/// Metadata flags of a disk catalog member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskFlags {
    pub nontrivial: bool,
    pub shortcut2: bool,
    pub shortcut4: bool,
    pub adjacent_degree2: bool,
}

pub fn disk_flags(mg: &MarkedPlaneGraph) -> DiskFlags {
    DiskFlags {
        nontrivial: !mg.is_trivial(),
        shortcut2: has_shortcut(mg, 2),
        shortcut4: has_shortcut(mg, 4),
        adjacent_degree2: has_adjacent_degree2(mg.graph()),
    }
}

impl DiskFlags {
    /// Nontrivial, no shortcut of length at most 2, no adjacent degree-2 pair.
    pub fn sparse(&self) -> bool {
        self.nontrivial && !self.shortcut2 && !self.adjacent_degree2
    }

    /// Nontrivial and no shortcut of length at most 4.
    pub fn shortcut_free(&self) -> bool {
        self.nontrivial && !self.shortcut4
    }
}
