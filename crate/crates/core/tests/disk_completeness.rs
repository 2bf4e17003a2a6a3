//! Completeness of the small disk catalogs, checked against a generator
//! that knows nothing about the construction operations: every plane graph
//! of girth 5 with a given outer cycle is grown from that cycle by drawing
//! paths across inner faces (critical graphs with a cycle as outer face
//! are 2-connected, so they all arise this way), and the critical ones
//! must be exactly the catalog.

use std::collections::{BTreeSet, HashSet, VecDeque};

use critatlas::color::is_critical;
use critatlas::diskgen::DiskCatalog;
use critatlas::embed::{add_face_path, canonical_key, IsoGroup, MarkedPlaneGraph, PlaneGraph};

/// Most vertices a critical graph with outer length `l <= 10` can have:
/// subdividing `10 - l` outer edges gives one with outer length 10, which
/// has at most `(37 * 10 - 320) / 3` vertices.
fn vertex_bound(l: usize) -> usize {
    (37 * 10 - 320) / 3 - (10 - l)
}

fn distances_from(g: &PlaneGraph, s: u32) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s as usize] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if d[w as usize] == usize::MAX {
                d[w as usize] = d[v as usize] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Canonical keys of all critical graphs with outer length `l`.
fn critical_by_ears(l: usize) -> (BTreeSet<Vec<u8>>, usize) {
    let group = IsoGroup::Reflect;
    let max_n = vertex_bound(l);
    let start = MarkedPlaneGraph::bare_cycle(l);
    let mut seen = HashSet::from([canonical_key(&start, group)]);
    let mut queue = VecDeque::from([start]);
    let mut critical = BTreeSet::new();
    while let Some(mg) = queue.pop_front() {
        if is_critical(&mg) {
            critical.insert(canonical_key(&mg, group));
        }
        let g = mg.graph();
        let outer = mg.mark_face(0).unwrap();
        let room = max_n - g.n();
        for f in (0..g.face_count() as u32).filter(|&f| f != outer) {
            let walk = g.walk_from(g.face_darts(f)[0]);
            for i in 0..walk.len() {
                let u = g.tail(walk[i]);
                let dist = distances_from(g, u);
                for &dj in &walk[i + 1..] {
                    let w = g.tail(dj);
                    // every new cycle runs through the whole path and back
                    let shortest = 5usize.saturating_sub(dist[w as usize]).max(1);
                    for len in shortest..=room + 1 {
                        let Ok(h) = add_face_path(&mg, walk[i], dj, len) else { continue };
                        if seen.insert(canonical_key(&h, group)) {
                            queue.push_back(h);
                        }
                    }
                }
            }
        }
    }
    (critical, seen.len())
}

fn check(l: usize) {
    let mut cat = DiskCatalog::new(IsoGroup::Reflect);
    cat.build_up_to(l);
    let built: BTreeSet<Vec<u8>> = cat.level(l).iter().map(|e| e.key.clone()).collect();
    let (found, explored) = critical_by_ears(l);
    println!("outer length {l}: explored {explored} graphs, {} critical, catalog {}", found.len(), built.len());
    assert_eq!(found, built);
}

#[test]
fn outer_length_8_is_complete() {
    check(8);
}

#[test]
fn outer_length_9_is_complete() {
    check(9);
}

#[test]
fn outer_length_10_is_complete() {
    check(10);
}
