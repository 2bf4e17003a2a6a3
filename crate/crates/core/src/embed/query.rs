//! Structural queries: short cycles, distances, chords, connectivity.

use std::collections::VecDeque;

use super::{MarkedPlaneGraph, PlaneGraph};

/// A cycle given by its vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<u32>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edge_set(&self) -> Vec<(u32, u32)> {
        let k = self.vertices.len();
        let mut es: Vec<(u32, u32)> = (0..k)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        es
    }
}

/// Every cycle of length `3..=max_len`, each reported once, starting at its
/// least vertex.
pub fn short_cycles(g: &PlaneGraph, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on = vec![false; g.n()];
    for s in 0..g.n() as u32 {
        path.push(s);
        on[s as usize] = true;
        extend_cycles(g, s, max_len, &mut path, &mut on, &mut out, false);
        on[s as usize] = false;
        path.pop();
    }
    out
}

fn extend_cycles(
    g: &PlaneGraph,
    s: u32,
    max_len: usize,
    path: &mut Vec<u32>,
    on: &mut [bool],
    out: &mut Vec<Cycle>,
    stop_at_first: bool,
) -> bool {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            out.push(Cycle { vertices: path.clone() });
            if stop_at_first {
                return true;
            }
        }
        if w > s && !on[w as usize] && path.len() < max_len {
            path.push(w);
            on[w as usize] = true;
            let done = extend_cycles(g, s, max_len, path, on, out, stop_at_first);
            on[w as usize] = false;
            path.pop();
            if done {
                return true;
            }
        }
    }
    false
}

/// Whether `g` has a cycle of length at most `max_len`.
pub fn has_short_cycle(g: &PlaneGraph, max_len: usize) -> bool {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on = vec![false; g.n()];
    for s in 0..g.n() as u32 {
        path.push(s);
        on[s as usize] = true;
        let found = extend_cycles(g, s, max_len, &mut path, &mut on, &mut out, true);
        on[s as usize] = false;
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// Every cycle of length at most 4 is one of the marked faces.
pub fn girth_ok(mg: &MarkedPlaneGraph) -> bool {
    let marked: Vec<Vec<(u32, u32)>> = (0..mg.marks().len())
        .filter(|&i| mg.mark_len(i) >= 3 && mg.mark_len(i) <= 4)
        .map(|i| {
            let mut e = mg.mark_edges(i);
            e.sort_unstable();
            e
        })
        .collect();
    if marked.is_empty() {
        return !has_short_cycle(mg.graph(), 4);
    }
    short_cycles(mg.graph(), 4).iter().all(|c| marked.contains(&c.edge_set()))
}

/// Length of a shortest path between two vertex sets.
pub fn distance(g: &PlaneGraph, s1: &[u32], s2: &[u32]) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    let mut q = VecDeque::new();
    for &v in s1 {
        if dist[v as usize] != 0 {
            dist[v as usize] = 0;
            q.push_back(v);
        }
    }
    let mut target = vec![false; g.n()];
    for &v in s2 {
        target[v as usize] = true;
    }
    while let Some(v) = q.pop_front() {
        if target[v as usize] {
            return dist[v as usize];
        }
        for &w in g.neighbors(v) {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                q.push_back(w);
            }
        }
    }
    usize::MAX
}

/// Distance between the two boundaries of a cylinder graph.
pub fn boundary_distance(mg: &MarkedPlaneGraph) -> usize {
    distance(mg.graph(), &mg.mark_vertices(0), &mg.mark_vertices(1))
}

/// Whether a disk graph has a `t`-chord with `t <= t_max` that is shorter
/// than the distance of its ends along the outer cycle.
pub fn has_shortcut(mg: &MarkedPlaneGraph, t_max: usize) -> bool {
    let g = mg.graph();
    let b = mg.mark_vertices(0);
    let l = b.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in b.iter().enumerate() {
        pos[v as usize] = i;
    }
    let cyc = |a: usize, c: usize| {
        let d = a.abs_diff(c);
        d.min(l - d)
    };
    let mut on = vec![false; g.n()];
    for &u in &b {
        on[u as usize] = true;
        let found = chord_dfs(g, u, u, 0, t_max, &pos, &cyc, &mut on);
        on[u as usize] = false;
        if found {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn chord_dfs(
    g: &PlaneGraph,
    start: u32,
    v: u32,
    len: usize,
    t_max: usize,
    pos: &[usize],
    cyc: &dyn Fn(usize, usize) -> usize,
    on: &mut [bool],
) -> bool {
    for &w in g.neighbors(v) {
        if on[w as usize] {
            continue;
        }
        let t = len + 1;
        if pos[w as usize] != usize::MAX {
            // a single edge along the boundary has distance 1 and never counts
            if t < cyc(pos[start as usize], pos[w as usize]) {
                return true;
            }
        } else if t < t_max {
            on[w as usize] = true;
            let found = chord_dfs(g, start, w, t, t_max, pos, cyc, on);
            on[w as usize] = false;
            if found {
                return true;
            }
        }
    }
    false
}

/// Whether two adjacent vertices both have degree 2.
pub fn has_adjacent_degree2(g: &PlaneGraph) -> bool {
    g.edges().any(|(u, v)| g.degree(u) == 2 && g.degree(v) == 2)
}

/// Lowpoint search; returns (has cut vertex, has bridge).
fn cut_structure(g: &PlaneGraph) -> (bool, bool) {
    let n = g.n();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut cut = false;
    let mut bridge = false;
    // iterative DFS: (vertex, parent, next neighbor index)
    let mut stack: Vec<(u32, u32, usize)> = vec![(0, u32::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;
    while let Some(&mut (v, p, ref mut i)) = stack.last_mut() {
        let nb = g.neighbors(v);
        if *i < nb.len() {
            let w = nb[*i];
            *i += 1;
            if disc[w as usize] == u32::MAX {
                disc[w as usize] = time;
                low[w as usize] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != p {
                low[v as usize] = low[v as usize].min(disc[w as usize]);
            }
        } else {
            stack.pop();
            if p != u32::MAX {
                low[p as usize] = low[p as usize].min(low[v as usize]);
                if low[v as usize] > disc[p as usize] {
                    bridge = true;
                }
                if p != 0 && low[v as usize] >= disc[p as usize] {
                    cut = true;
                }
            }
        }
    }
    if root_children > 1 {
        cut = true;
    }
    (cut, bridge)
}

pub fn is_two_connected(g: &PlaneGraph) -> bool {
    g.n() >= 3 && !cut_structure(g).0
}

pub fn is_two_edge_connected(g: &PlaneGraph) -> bool {
    g.n() >= 2 && !cut_structure(g).1
}

/// Longest face that is not marked (0 if every face is marked).
pub fn max_internal_face(mg: &MarkedPlaneGraph) -> usize {
    let g = mg.graph();
    let marked: Vec<u32> = (0..mg.marks().len()).filter_map(|i| mg.mark_face(i)).collect();
    (0..g.face_count() as u32).filter(|f| !marked.contains(f)).map(|f| g.face_len(f)).max().unwrap_or(0)
}
