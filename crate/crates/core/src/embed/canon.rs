//! Canonical keys for marked plane graphs under embedding isomorphism.
//!
//! A key is the lexicographically smallest breadth-first code over every
//! admissible root: a dart on a marked face (or leaving a marked vertex),
//! traversed clockwise or counterclockwise when reflections are allowed.

use std::hash::{Hash, Hasher};

use super::{MarkSite, MarkedPlaneGraph, PlaneGraph};

/// Which embedding isomorphisms identify two marked graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IsoGroup {
    /// Orientation-preserving and orientation-reversing maps.
    #[default]
    Reflect,
    /// Orientation-preserving maps only.
    OrientOnly,
}

impl std::str::FromStr for IsoGroup {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "reflect" => Ok(IsoGroup::Reflect),
            "orient-only" => Ok(IsoGroup::OrientOnly),
            other => Err(format!("unknown isomorphism group '{other}'")),
        }
    }
}

const SEP: u16 = u16::MAX;

struct Coder<'a> {
    g: &'a PlaneGraph,
    label: Vec<u32>,
    /// dart through which each vertex was first reached, pointing back
    entry: Vec<u32>,
    order: Vec<u32>,
}

/// Compares `code` against `best` as elements are pushed; aborts once the
/// partial code is known to be larger.
struct Emitter<'b> {
    out: Vec<u16>,
    best: Option<&'b [u16]>,
    smaller: bool,
}

impl Emitter<'_> {
    #[inline]
    fn push(&mut self, x: u16) -> bool {
        if !self.smaller {
            if let Some(b) = self.best {
                let k = self.out.len();
                let bx = b.get(k).copied().unwrap_or(0);
                if x > bx {
                    return false;
                }
                if x < bx {
                    self.smaller = true;
                }
            }
        }
        self.out.push(x);
        true
    }
}

impl<'a> Coder<'a> {
    fn new(g: &'a PlaneGraph) -> Self {
        Coder { g, label: vec![u32::MAX; g.n()], entry: vec![u32::MAX; g.n()], order: Vec::with_capacity(g.n()) }
    }

    fn reset(&mut self) {
        self.label.iter_mut().for_each(|x| *x = u32::MAX);
        self.order.clear();
    }

    #[inline]
    fn step(&self, d: u32, mirror: bool) -> u32 {
        if mirror {
            self.g.rot_prev(d)
        } else {
            self.g.rot_next(d)
        }
    }

    /// Emits the code of `g` rooted at dart `root`; false if it exceeds best.
    fn encode(&mut self, mg: &MarkedPlaneGraph, root: u32, root_mark: usize, mirror: bool, em: &mut Emitter) -> bool {
        let g = self.g;
        self.reset();
        let r = g.tail(root);
        self.label[r as usize] = 0;
        self.entry[r as usize] = root;
        self.order.push(r);
        let mut next = 1u32;
        let mut qi = 0;
        while qi < self.order.len() {
            let v = self.order[qi];
            qi += 1;
            let start = self.entry[v as usize];
            let deg = g.degree(v);
            if !em.push(deg as u16) {
                return false;
            }
            let mut d = start;
            for _ in 0..deg {
                let w = g.head(d);
                if self.label[w as usize] == u32::MAX {
                    self.label[w as usize] = next;
                    next += 1;
                    self.entry[w as usize] = g.rev(d);
                    self.order.push(w);
                }
                if !em.push(self.label[w as usize] as u16) {
                    return false;
                }
                d = self.step(d, mirror);
            }
        }
        // marks: the rooted one first, then the rest in role order
        let order: Vec<usize> =
            std::iter::once(root_mark).chain((0..mg.marks().len()).filter(|&i| i != root_mark)).collect();
        for i in order {
            if !em.push(SEP) {
                return false;
            }
            match mg.marks()[i].site {
                MarkSite::Vertex(v) => {
                    if !em.push(0) || !em.push(self.label[v as usize] as u16) {
                        return false;
                    }
                }
                MarkSite::Face(d) => {
                    if !em.push(1) {
                        return false;
                    }
                    let f = g.face_of(d);
                    let mut seq: Vec<u16> = g.face_darts(f).iter().map(|&x| self.label[g.tail(x) as usize] as u16).collect();
                    if mirror {
                        seq.reverse();
                    }
                    let k = min_rotation(&seq);
                    for j in 0..seq.len() {
                        if !em.push(seq[(k + j) % seq.len()]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Index of the lexicographically least rotation of `s`.
fn min_rotation(s: &[u16]) -> usize {
    let n = s.len();
    let mut best = 0;
    for k in 1..n {
        for j in 0..n {
            let (a, b) = (s[(k + j) % n], s[(best + j) % n]);
            if a != b {
                if a < b {
                    best = k;
                }
                break;
            }
        }
    }
    best
}

/// Candidate roots for mark `i`: darts of the marked face in walk direction
/// (reversed for mirrored traversal), or darts leaving a marked vertex.
fn roots(mg: &MarkedPlaneGraph, i: usize, mirror: bool) -> Vec<u32> {
    let g = mg.graph();
    match mg.marks()[i].site {
        MarkSite::Face(d) => {
            let f = g.face_of(d);
            if mirror {
                g.face_darts(f).iter().map(|&x| g.rev(x)).collect()
            } else {
                g.face_darts(f).to_vec()
            }
        }
        MarkSite::Vertex(v) => {
            let a = g.first_dart(v);
            (a..a + g.degree(v) as u32).collect()
        }
    }
}

/// Canonical byte key of a marked plane graph. Equal keys iff an embedding
/// isomorphism (within `group`) maps marks onto marks; boundary pairs of
/// cylinders are unordered.
pub fn canonical_key(mg: &MarkedPlaneGraph, group: IsoGroup) -> Vec<u8> {
    let g = mg.graph();
    let mirrors: &[bool] = match group {
        IsoGroup::Reflect => &[false, true],
        IsoGroup::OrientOnly => &[false],
    };
    // restrict roots to those maximizing an isomorphism invariant
    let mut cands: Vec<(usize, u32, bool)> = Vec::new();
    let mut best_inv = (0usize, 0usize, 0usize);
    for i in 0..mg.marks().len() {
        let kind = match mg.marks()[i].site {
            MarkSite::Face(_) => 1,
            MarkSite::Vertex(_) => 0,
        };
        for &m in mirrors {
            for d in roots(mg, i, m) {
                let inv = (kind, g.degree(g.tail(d)), g.degree(g.head(d)));
                if inv > best_inv || cands.is_empty() {
                    cands.clear();
                    best_inv = inv;
                }
                if inv == best_inv {
                    cands.push((i, d, m));
                }
            }
        }
    }
    let mut coder = Coder::new(g);
    let mut best: Vec<u16> = Vec::new();
    let mut have = false;
    for (i, d, m) in cands {
        let mut em = Emitter { out: Vec::with_capacity(best.len()), best: if have { Some(&best) } else { None }, smaller: false };
        if coder.encode(mg, d, i, m, &mut em) && (!have || em.smaller) {
            best = em.out;
            have = true;
        }
    }
    let mut out = Vec::with_capacity(2 * best.len() + 4);
    out.extend_from_slice(&(g.n() as u16).to_be_bytes());
    for x in best {
        out.extend_from_slice(&x.to_be_bytes());
    }
    out
}

/// 128-bit digest of a key for compact deduplication sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyDigest(pub u64, pub u64);

pub fn key_digest(key: &[u8]) -> KeyDigest {
    let mut h1 = std::collections::hash_map::DefaultHasher::new();
    key.hash(&mut h1);
    let mut h2 = std::collections::hash_map::DefaultHasher::new();
    0x9e37_79b9_7f4a_7c15u64.hash(&mut h2);
    key.hash(&mut h2);
    KeyDigest(h1.finish(), h2.finish())
}
