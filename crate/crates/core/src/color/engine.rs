//! Backtracking 3-coloring with forward checking on bitmask domains.
//!
//! Precolorings of the marked vertex list `s` are handled up to color
//! permutation: the canonical form gives `s[0]` color 0 and introduces new
//! colors in increasing order. A canonical precoloring is packed into a
//! `u64`, two bits per vertex, `s[0]` most significant, so depth-first
//! enumeration visits codes in increasing order.

use crate::embed::MarkedPlaneGraph;

pub(crate) const NONE: u8 = u8::MAX;
pub(crate) const NO_EDGE: u32 = u32::MAX;

/// Flattened constraint graph of a marked plane graph.
#[derive(Debug, Clone)]
pub(crate) struct Net {
    pub n: usize,
    /// (neighbor, edge id)
    pub adj: Vec<Vec<(u32, u32)>>,
    pub edges: Vec<(u32, u32)>,
    /// Marked vertices in mark walk order.
    pub s: Vec<u32>,
    pub in_s: Vec<bool>,
    /// Whether each edge belongs to the marked subgraph.
    pub edge_in_s: Vec<bool>,
    /// Edges among `s` that belong to the marked subgraph, as index pairs into `s`.
    pub s_pairs: Vec<(usize, usize)>,
}

impl Net {
    pub fn new(mg: &MarkedPlaneGraph) -> Self {
        let g = mg.graph();
        let n = g.n();
        let edges: Vec<(u32, u32)> = g.edges().collect();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }
        let s = mg.marked_vertices();
        let mut in_s = vec![false; n];
        let mut idx = vec![usize::MAX; n];
        for (i, &v) in s.iter().enumerate() {
            in_s[v as usize] = true;
            idx[v as usize] = i;
        }
        let mut marked_edges: Vec<(u32, u32)> = (0..mg.marks().len()).flat_map(|i| mg.mark_edges(i)).collect();
        marked_edges.sort_unstable();
        marked_edges.dedup();
        let edge_in_s = edges.iter().map(|e| marked_edges.binary_search(e).is_ok()).collect();
        let s_pairs = marked_edges.iter().map(|&(u, v)| (idx[u as usize], idx[v as usize])).collect();
        Net { n, adj, edges, s, in_s, edge_in_s, s_pairs }
    }

    pub fn k(&self) -> usize {
        self.s.len()
    }
}

/// Extra constraints of a search: one edge ignored and optionally two
/// vertices forced to share a color.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Variant {
    pub skip: u32,
    pub eq: Option<(u32, u32)>,
}

impl Variant {
    pub const PLAIN: Variant = Variant { skip: NO_EDGE, eq: None };
}

pub(crate) struct Search<'a> {
    net: &'a Net,
    var: Variant,
    dom: Vec<u8>,
    color: Vec<u8>,
    trail: Vec<(u32, u8, u8)>,
    /// last complete interior solution, tried first at every leaf
    cache: Vec<u8>,
    have_cache: bool,
    pub leaves: u64,
}

impl<'a> Search<'a> {
    pub fn new(net: &'a Net, var: Variant) -> Self {
        Search {
            net,
            var,
            dom: vec![0b111; net.n],
            color: vec![NONE; net.n],
            trail: Vec::with_capacity(4 * net.n),
            cache: vec![NONE; net.n],
            have_cache: false,
            leaves: 0,
        }
    }

    #[inline]
    fn set_dom(&mut self, w: u32, d: u8) {
        self.trail.push((w, self.dom[w as usize], self.color[w as usize]));
        self.dom[w as usize] = d;
    }

    /// Colors `v` with `c`, pruning neighbor domains; false on conflict.
    pub fn assign(&mut self, v: u32, c: u8) -> bool {
        let bit = 1u8 << c;
        if self.dom[v as usize] & bit == 0 {
            return false;
        }
        self.trail.push((v, self.dom[v as usize], self.color[v as usize]));
        self.color[v as usize] = c;
        self.dom[v as usize] = bit;
        let net = self.net;
        for &(w, e) in &net.adj[v as usize] {
            if e == self.var.skip {
                continue;
            }
            let cw = self.color[w as usize];
            if cw == c {
                return false;
            }
            if cw == NONE {
                let d = self.dom[w as usize];
                if d & bit != 0 {
                    self.set_dom(w, d & !bit);
                    if d & !bit == 0 {
                        return false;
                    }
                }
            }
        }
        if let Some((a, b)) = self.var.eq {
            let p = if v == a {
                Some(b)
            } else if v == b {
                Some(a)
            } else {
                None
            };
            if let Some(p) = p {
                let cp = self.color[p as usize];
                if cp != NONE {
                    if cp != c {
                        return false;
                    }
                } else {
                    let d = self.dom[p as usize];
                    if d & !bit != 0 {
                        self.set_dom(p, d & bit);
                    }
                    if d & bit == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d, c) = self.trail.pop().unwrap();
            self.dom[v as usize] = d;
            self.color[v as usize] = c;
        }
    }

    /// Colors every remaining vertex, if possible. On success the coloring
    /// is left in place; the caller undoes to its own mark.
    pub fn complete(&mut self) -> bool {
        let mut best = u32::MAX;
        let mut best_sz = 4;
        for v in 0..self.net.n as u32 {
            if self.color[v as usize] == NONE {
                let sz = self.dom[v as usize].count_ones();
                if sz < best_sz {
                    best_sz = sz;
                    best = v;
                    if sz <= 1 {
                        break;
                    }
                }
            }
        }
        if best == u32::MAX {
            return true;
        }
        if best_sz == 0 {
            return false;
        }
        let d = self.dom[best as usize];
        for c in 0..3u8 {
            if d & (1 << c) == 0 {
                continue;
            }
            let m = self.mark();
            if self.assign(best, c) && self.complete() {
                return true;
            }
            self.undo(m);
        }
        false
    }

    /// Whether the current partial coloring (all of `s` assigned) extends.
    pub fn leaf_extends(&mut self) -> bool {
        self.leaves += 1;
        if self.have_cache && self.cache_fits() {
            return true;
        }
        let m = self.mark();
        let ok = self.complete();
        if ok {
            self.cache.copy_from_slice(&self.color);
            self.have_cache = true;
        }
        self.undo(m);
        ok
    }

    /// The cached coloring came from the same variant, so only its
    /// agreement with the current precoloring needs checking.
    fn cache_fits(&self) -> bool {
        (0..self.net.n).all(|v| self.color[v] != NONE || self.dom[v] & (1 << self.cache[v]) != 0)
    }

    pub fn color_of(&self, v: u32) -> u8 {
        self.color[v as usize]
    }
}

/// Canonical proper colorings of the marked subgraph (marked edges only),
/// as sorted codes.
pub(crate) fn canonical_precolorings(net: &Net) -> Vec<u64> {
    let k = net.k();
    let mut nb: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in &net.s_pairs {
        nb[a.max(b)].push(a.min(b));
    }
    let mut out = Vec::new();
    let mut cols = vec![0u8; k];
    fn rec(i: usize, maxc: u8, code: u64, k: usize, nb: &[Vec<usize>], cols: &mut [u8], out: &mut Vec<u64>) {
        if i == k {
            out.push(code);
            return;
        }
        let top = if i == 0 { 0 } else { (maxc + 1).min(2) };
        for c in 0..=top {
            if nb[i].iter().any(|&j| cols[j] == c) {
                continue;
            }
            cols[i] = c;
            rec(i + 1, maxc.max(c), (code << 2) | c as u64, k, nb, cols, out);
        }
    }
    if k > 0 {
        rec(0, 0, 0, k, &nb, &mut cols, &mut out);
    }
    out
}

/// Depth-first walk over canonical colorings of `s` with forward checking;
/// `leaf` is called with the code once all of `s` is colored and returns
/// true to stop. `prune(lo, hi)` may skip the code range of a subtree.
pub(crate) fn walk_precolorings(
    search: &mut Search,
    s: &[u32],
    prune: &mut dyn FnMut(u64, u64) -> bool,
    leaf: &mut dyn FnMut(&mut Search, u64) -> bool,
) -> bool {
    let k = s.len();
    fn rec(
        search: &mut Search,
        s: &[u32],
        k: usize,
        i: usize,
        maxc: u8,
        code: u64,
        prune: &mut dyn FnMut(u64, u64) -> bool,
        leaf: &mut dyn FnMut(&mut Search, u64) -> bool,
    ) -> bool {
        if i == k {
            return leaf(search, code);
        }
        let top = if i == 0 { 0 } else { (maxc + 1).min(2) };
        for c in 0..=top {
            let prefix = (code << 2) | c as u64;
            let rest = 2 * (k - i - 1) as u32;
            let lo = prefix << rest;
            let hi = lo | ((1u64 << rest) - 1);
            if prune(lo, hi) {
                continue;
            }
            let m = search.mark();
            if search.assign(s[i], c) && rec(search, s, k, i + 1, maxc.max(c), prefix, prune, leaf) {
                search.undo(m);
                return true;
            }
            search.undo(m);
        }
        false
    }
    if k == 0 {
        return leaf(search, 0);
    }
    rec(search, s, k, 0, 0, 0, prune, leaf)
}

/// Sorted codes of canonical precolorings that extend under `var`.
pub(crate) fn extending_codes(net: &Net, var: Variant) -> Vec<u64> {
    let mut search = Search::new(net, var);
    let mut out = Vec::new();
    walk_precolorings(&mut search, &net.s, &mut |_, _| false, &mut |sr, code| {
        if sr.leaf_extends() {
            out.push(code);
        }
        false
    });
    out
}

/// Number of entries of sorted `v` within `lo..=hi`.
#[inline]
pub(crate) fn count_in(v: &[u64], lo: u64, hi: u64) -> usize {
    v.partition_point(|&x| x <= hi) - v.partition_point(|&x| x < lo)
}

/// Decodes a canonical code into colors of `s`.
#[cfg(test)]
pub(crate) fn decode(code: u64, k: usize) -> Vec<u8> {
    (0..k).map(|i| ((code >> (2 * (k - 1 - i))) & 3) as u8).collect()
}

/// Canonical code of an arbitrary coloring of `s`.
pub(crate) fn canonical_code(cols: &[u8]) -> u64 {
    let mut map = [NONE; 3];
    let mut next = 0u8;
    let mut code = 0u64;
    for &c in cols {
        if map[c as usize] == NONE {
            map[c as usize] = next;
            next += 1;
        }
        code = (code << 2) | map[c as usize] as u64;
    }
    code
}

/// Whether `fixed` (vertex, color) pairs extend to a proper coloring.
pub(crate) fn extends_fixed(net: &Net, var: Variant, fixed: &[(u32, u8)]) -> bool {
    let mut search = Search::new(net, var);
    for &(v, c) in fixed {
        if search.color_of(v) == c {
            continue;
        }
        if !search.assign(v, c) {
            return false;
        }
    }
    search.complete()
}

/// Searches for a canonical precoloring that does not extend to the whole
/// graph but extends once edge `e` is removed. `ext` is the sorted list of
/// extending codes and `all` the sorted list of canonical precolorings.
pub(crate) fn edge_witness(net: &Net, e: u32, ext: &[u64], all: &[u64]) -> Option<u64> {
    let (u, v) = net.edges[e as usize];
    // any coloring of G - e that is not a coloring of G gives u and v one color
    let var = Variant { skip: e, eq: Some((u, v)) };
    let mut search = Search::new(net, var);
    let mut found = None;
    walk_precolorings(
        &mut search,
        &net.s,
        &mut |lo, hi| count_in(all, lo, hi) == count_in(ext, lo, hi),
        &mut |sr, code| {
            if ext.binary_search(&code).is_ok() {
                return false;
            }
            if sr.leaf_extends() {
                found = Some(code);
                return true;
            }
            false
        },
    );
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::PlaneGraph;

    #[test]
    fn canonical_counts_of_cycles() {
        // proper 3-colorings of C_k: 2^k + 2 (-1)^k, one sixth canonical
        for k in 3..=10usize {
            let net = Net::new(&MarkedPlaneGraph::bare_cycle(k));
            let want = ((1i64 << k) + if k % 2 == 0 { 2 } else { -2 }) / 6;
            assert_eq!(canonical_precolorings(&net).len() as i64, want, "k={k}");
        }
    }

    #[test]
    fn bare_cycle_everything_extends() {
        let net = Net::new(&MarkedPlaneGraph::bare_cycle(6));
        assert_eq!(extending_codes(&net, Variant::PLAIN), canonical_precolorings(&net));
    }

    #[test]
    fn codes_round_trip() {
        let cols = [2u8, 0, 2, 1];
        let code = canonical_code(&cols);
        assert_eq!(decode(code, 4), vec![0, 1, 0, 2]);
    }

    #[test]
    fn wheel_center_wipeout() {
        // 4-cycle with a center adjacent to all four
        let rot = vec![vec![1, 4, 3], vec![2, 4, 0], vec![3, 4, 1], vec![0, 4, 2], vec![0, 1, 2, 3]];
        let g = PlaneGraph::from_rotations(rot).unwrap();
        let mg = MarkedPlaneGraph::disk(g.clone(), g.find_dart(1, 0).unwrap()).unwrap();
        assert_eq!(mg.mark_len(0), 4);
        let net = Net::new(&mg);
        assert!(!extends_fixed(&net, Variant::PLAIN, &[(0, 0), (1, 1), (2, 0), (3, 2)]));
        assert!(extends_fixed(&net, Variant::PLAIN, &[(0, 0), (1, 1), (2, 0), (3, 1)]));
    }
}
