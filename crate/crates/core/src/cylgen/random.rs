//! Random cylinder graphs whose boundaries are far apart: two short cycles
//! joined by a long path, grown by drawing random paths across faces while
//! all other cycles stay of length at least 5 and the boundaries stay at
//! distance at least 4. No precoloring of such a graph should fail to
//! extend.

use rand::Rng;

use crate::embed::{add_face_path, boundary_distance, girth_ok, MarkedPlaneGraph};

use super::{identify_segments, SegmentSplit};

/// Smallest boundary distance the generator keeps.
pub const MIN_DISTANCE: usize = 4;

/// Two boundaries of the given lengths joined by a path of length `gap`.
pub fn dumbbell(l1: usize, l2: usize, gap: usize) -> MarkedPlaneGraph {
    let h = MarkedPlaneGraph::bare_cycle(l1 + l2 + 2 * gap);
    let s = SegmentSplit { start: 0, first: l1, path: gap, second: l2, shared_edge: false };
    identify_segments(&h, s).expect("a path between two cycles has no short cycle")
}

/// A random graph with boundaries of lengths 3 or 4 at distance at least
/// 4, all other cycles of length at least 5, grown to about `target`
/// vertices (fewer if the growth stalls).
pub fn far_instance<R: Rng>(rng: &mut R, target: usize) -> MarkedPlaneGraph {
    let (l1, l2) = (rng.gen_range(3..=4), rng.gen_range(3..=4));
    let mut mg = dumbbell(l1, l2, rng.gen_range(MIN_DISTANCE..=MIN_DISTANCE + 2));
    let mut stalls = 0;
    while mg.graph().n() < target && stalls < 200 {
        let g = mg.graph();
        let faces: Vec<u32> = (0..g.face_count() as u32).filter(|&f| (0..2).all(|k| mg.mark_face(k) != Some(f))).collect();
        let f = faces[rng.gen_range(0..faces.len())];
        let l = g.face_len(f);
        let walk = g.walk_from(g.face_darts(f)[0]);
        let (di, dj) = (walk[rng.gen_range(0..l)], walk[rng.gen_range(0..l)]);
        let len = rng.gen_range(1..=4);
        match add_face_path(&mg, di, dj, len) {
            Ok(next) if girth_ok(&next) && boundary_distance(&next) >= MIN_DISTANCE => {
                mg = next;
                stalls = 0;
            }
            _ => stalls += 1,
        }
    }
    mg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ExtensionTable;
    use rand::{rngs::StdRng, SeedableRng};

    #[test]
    fn dumbbell_shape() {
        let g = dumbbell(3, 4, 5);
        assert_eq!(g.graph().n(), 3 + 4 + 4);
        assert_eq!(boundary_distance(&g), 5);
    }

    #[test]
    fn far_instances_grow_and_extend() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let g = far_instance(&mut rng, 16);
            assert!(girth_ok(&g));
            assert!(boundary_distance(&g) >= MIN_DISTANCE);
            assert!(g.graph().n() >= 12);
            let t = ExtensionTable::new(&g);
            assert_eq!(t.extending(), t.total());
        }
    }
}
