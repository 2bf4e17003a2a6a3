//! Brute-force reference for criticality on small graphs: enumerates every
//! 3-coloring of the whole vertex set and every set of removable edges.

use crate::embed::MarkedPlaneGraph;

/// Largest instance the exhaustive check accepts.
pub const MAX_VERTICES: usize = 14;
pub const MAX_FREE_EDGES: usize = 24;

/// Criticality decided over all proper subgraphs containing the marks;
/// `None` if the instance is too large.
pub fn is_critical_exhaustive(mg: &MarkedPlaneGraph) -> Option<bool> {
    let g = mg.graph();
    let n = g.n();
    if n > MAX_VERTICES {
        return None;
    }
    let marked = mg.marked_vertices();
    let mut in_s = vec![false; n];
    for &v in &marked {
        in_s[v as usize] = true;
    }
    let mut s_edges: Vec<(u32, u32)> = (0..mg.marks().len()).flat_map(|i| mg.mark_edges(i)).collect();
    s_edges.sort_unstable();
    s_edges.dedup();
    let free: Vec<(u32, u32)> = g.edges().filter(|e| s_edges.binary_search(e).is_err()).collect();
    let m = free.len();
    if m > MAX_FREE_EDGES {
        return None;
    }
    // removing an isolated non-marked vertex changes nothing
    if (0..n).any(|v| !in_s[v] && g.degree(v as u32) == 0) {
        return Some(false);
    }
    // colorings proper on the marked subgraph, grouped by their marked part
    let mut by_phi: std::collections::HashMap<Vec<u8>, Vec<u32>> = std::collections::HashMap::new();
    let total = 3usize.pow(n as u32);
    let mut col = vec![0u8; n];
    for idx in 0..total {
        let mut x = idx;
        for c in col.iter_mut() {
            *c = (x % 3) as u8;
            x /= 3;
        }
        if s_edges.iter().any(|&(u, v)| col[u as usize] == col[v as usize]) {
            continue;
        }
        let mut mask = 0u32;
        for (i, &(u, v)) in free.iter().enumerate() {
            if col[u as usize] == col[v as usize] {
                mask |= 1 << i;
            }
        }
        let phi: Vec<u8> = marked.iter().map(|&v| col[v as usize]).collect();
        by_phi.entry(phi).or_default().push(mask);
    }
    // a removed set F is witnessed by a non-extending phi having some
    // coloring whose violated edges all lie in F
    let mut witnessed = vec![false; 1usize << m];
    for masks in by_phi.values() {
        if masks.contains(&0) {
            continue;
        }
        for &mk in masks {
            witnessed[mk as usize] = true;
        }
    }
    for i in 0..m {
        for f in 0..(1usize << m) {
            if f & (1 << i) != 0 && witnessed[f ^ (1 << i)] {
                witnessed[f] = true;
            }
        }
    }
    Some((1..(1usize << m)).all(|f| witnessed[f]))
}
