//! Class C: plane graphs grown from a 4-cycle by repeatedly wrapping the
//! outer 4-face `v1 v2 v3 v4` (with `v1`, `v3` of degree 2) in a new
//! 4-face `v1 v2' v3' v4'` joined to `v3` through `v3'`. The original
//! 4-cycle and the final outer face are the two boundaries.

use crate::embed::{MarkSite, MarkedPlaneGraph, PlaneGraph};

fn insert_after(r: &mut Vec<u32>, after: u32, x: &[u32]) {
    let p = r.iter().position(|&w| w == after).expect("neighbor missing from rotation");
    for (k, &v) in x.iter().enumerate() {
        r.insert(p + 1 + k, v);
    }
}

/// One wrapping step. `outer` lists the outer face clockwise with the
/// outer face on the left of `outer[0] -> outer[1]`, and `outer[0]`,
/// `outer[2]` of degree 2. Returns the new outer face in the same form,
/// rooted at `v2'`.
fn wrap(rot: &mut Vec<Vec<u32>>, outer: [u32; 4]) -> [u32; 4] {
    let [o0, o1, o2, o3] = outer;
    let n = rot.len() as u32;
    let (a, b, c) = (n, n + 1, n + 2);
    // outer corners sit right after the outgoing outer dart
    insert_after(&mut rot[o0 as usize], o1, &[a, c]);
    insert_after(&mut rot[o2 as usize], o3, &[b]);
    rot.push(vec![o0, b]);
    rot.push(vec![a, o2, c]);
    rot.push(vec![b, o0]);
    [a, b, c, o0]
}

/// The class-C graph after `n` wrapping steps, each rooted at the first
/// new degree-2 vertex; `class_c(0)` is the 4-cycle with both faces marked.
pub fn class_c(n: usize) -> MarkedPlaneGraph {
    class_c_with(&vec![false; n])
}

/// Like `class_c`, with `flips[i]` choosing the other degree-2 vertex of
/// the outer face as the root of step `i + 1`.
pub fn class_c_with(flips: &[bool]) -> MarkedPlaneGraph {
    let mut rot: Vec<Vec<u32>> = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
    // the outer face is the one on the left of 1 -> 0
    let mut outer = [1, 0, 3, 2];
    for &flip in flips {
        let o = if flip { [outer[2], outer[3], outer[0], outer[1]] } else { outer };
        outer = wrap(&mut rot, o);
    }
    let g = PlaneGraph::from_rotations(rot).expect("class C graphs are plane");
    let d_out = g.find_dart(outer[0], outer[1]).unwrap();
    let d_in = g.find_dart(0, 1).unwrap();
    MarkedPlaneGraph::cylinder(g, MarkSite::Face(d_in), MarkSite::Face(d_out)).expect("both boundaries are 4-faces")
}

/// Removes vertices, keeping the rotation order of the rest. Returns the
/// graph and the old-to-new vertex map.
pub(crate) fn delete_vertices(g: &PlaneGraph, dead: &[u32]) -> Option<(PlaneGraph, Vec<u32>)> {
    let mut id = vec![u32::MAX; g.n()];
    let mut k = 0;
    for v in 0..g.n() as u32 {
        if !dead.contains(&v) {
            id[v as usize] = k;
            k += 1;
        }
    }
    let rot = (0..g.n() as u32)
        .filter(|v| !dead.contains(v))
        .map(|v| g.neighbors(v).iter().filter(|w| !dead.contains(w)).map(|&w| id[w as usize]).collect())
        .collect();
    PlaneGraph::from_rotations(rot).ok().map(|h| (h, id))
}

/// Whether the boundary `outer` (a mark index) was the last one wrapped
/// on, with `inner` the original 4-cycle; peels one layer at a time.
fn peels_to_cycle(mg: &MarkedPlaneGraph, outer: usize) -> bool {
    let g = mg.graph();
    let inner = 1 - outer;
    if g.n() == 4 && g.m() == 4 {
        return true;
    }
    let o = mg.mark_vertices(outer);
    let keep = mg.mark_vertices(inner);
    if o.len() != 4 || keep.len() != 4 {
        return false;
    }
    for j in 0..4 {
        let (a, b, c, x) = (o[j], o[(j + 1) % 4], o[(j + 2) % 4], o[(j + 3) % 4]);
        if g.degree(a) != 2 || g.degree(c) != 2 || g.degree(b) != 3 || g.degree(x) != 4 {
            continue;
        }
        if [a, b, c].iter().any(|v| keep.contains(v)) {
            continue;
        }
        let Some(&y) = g.neighbors(b).iter().find(|&&w| w != a && w != c) else { continue };
        let Some((h, id)) = delete_vertices(g, &[a, b, c]) else { continue };
        let (nx, ny) = (id[x as usize], id[y as usize]);
        if h.degree(nx) != 2 || h.degree(ny) != 2 {
            continue;
        }
        let kd = {
            let d = mg.marks()[inner].site;
            match d {
                MarkSite::Face(d) => h.find_dart(id[g.tail(d) as usize], id[g.head(d) as usize]),
                MarkSite::Vertex(_) => None,
            }
        };
        let Some(kd) = kd else { continue };
        // the new outer face: the 4-face through x and y other than the inner mark
        let kf = h.face_of(kd);
        let cand = (0..h.face_count() as u32)
            .find(|&f| f != kf && h.face_len(f) == 4 && h.face_is_cycle(f) && {
                let vs = h.face_vertices(f);
                vs.contains(&nx) && vs.contains(&ny)
            });
        let Some(f) = cand else { continue };
        let od = h.face_darts(f)[0];
        let sites = if outer == 0 { [MarkSite::Face(od), MarkSite::Face(kd)] } else { [MarkSite::Face(kd), MarkSite::Face(od)] };
        let Ok(next) = MarkedPlaneGraph::cylinder(h, sites[0], sites[1]) else { continue };
        if peels_to_cycle(&next, outer) {
            return true;
        }
    }
    false
}

/// Whether a cylinder graph with two 4-face boundaries belongs to class C.
pub fn is_class_c(mg: &MarkedPlaneGraph) -> bool {
    if !mg.is_cylinder() || mg.mark_len(0) != 4 || mg.mark_len(1) != 4 {
        return false;
    }
    peels_to_cycle(mg, 0) || peels_to_cycle(mg, 1)
}
