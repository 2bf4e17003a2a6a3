//! Cylinder catalogs: plane graphs critical with respect to two precolored
//! boundary faces of length 3 or 4, all other cycles of length at least 5
//! except for a chain of separating short cycles.
//!
//! Level 0 comes from closing up disk catalog members along their outer
//! face; level `k` glues a level-0 member onto a level-`(k - 1)` member
//! along a common boundary, so members at level `k` have exactly `k`
//! separating cycles of length at most 4.

mod classc;
pub mod filters;
pub mod names;
pub mod random;
mod segment;

use std::collections::HashMap;

use log::info;
use rayon::prelude::*;

use crate::catalog::{Entry, GenerationRecord, OpKind};
use crate::color::{c_max, is_critical};
use crate::diskgen::DiskCatalog;
use crate::embed::map::Map;
use crate::embed::{
    boundary_distance, canonical_key, edge_dart_of, short_cycles, suppress_degree2, zip_paths, Cycle, EmbedError, IsoGroup,
    MarkSite, MarkedPlaneGraph, PlaneGraph,
};

pub use classc::{class_c, class_c_with, is_class_c};
pub use segment::{cut_along_path, identify_segments, CylError, SegmentSplit};

/// Deepest level built by default: beyond it only class-C growth remains.
pub const MAX_LEVEL: usize = 6;

/// Largest outer length of disk graphs that close up into level-0 members.
pub const MAX_CUT_LEN: usize = 16;

/// Number of proper colorings of a precolored boundary of length `l`.
pub fn boundary_colorings(l: usize) -> usize {
    match l {
        3 => 6,
        4 => 18,
        _ => 3,
    }
}

/// Per-member metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CylMeta {
    pub lengths: (usize, usize),
    pub distance: usize,
    /// `(c(C1, C2), c(C2, C1))`.
    pub c: (usize, usize),
    pub class_c: bool,
    /// The graph is the union of its two boundaries.
    pub trivial: bool,
    pub separating: usize,
}

impl CylMeta {
    pub fn of(mg: &MarkedPlaneGraph) -> Self {
        let (c12, c21) = (c_max(mg, 0, 1), c_max(mg, 1, 0));
        CylMeta {
            lengths: (mg.mark_len(0), mg.mark_len(1)),
            distance: boundary_distance(mg),
            c: (c12, c21),
            class_c: is_class_c(mg),
            trivial: mg.is_trivial(),
            separating: separating_cycles(mg).map_or(0, |c| c.len()),
        }
    }

    /// The same metadata with the two boundaries swapped.
    pub fn swapped(&self) -> Self {
        CylMeta { lengths: (self.lengths.1, self.lengths.0), c: (self.c.1, self.c.0), ..*self }
    }
}

#[derive(Debug, Clone)]
pub struct CylEntry {
    pub entry: Entry,
    pub meta: CylMeta,
}

/// Counters for one level.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LevelReport {
    pub level: usize,
    pub generated: u64,
    /// Rejected by the embedding layer or by the boundary checks.
    pub invalid: u64,
    /// Short cycles other than the boundaries and the allowed chain.
    pub short_cycle: u64,
    /// Gluings skipped by the coloring-count bound.
    pub pruned: u64,
    pub duplicate: u64,
    pub tested: u64,
    pub critical: u64,
    pub count: usize,
    pub class_c: usize,
}

/// Faces on the same side of the edge set `cut` as face `f`.
fn side_of(g: &PlaneGraph, cut: &[(u32, u32)], f: u32) -> Vec<bool> {
    let mut seen = vec![false; g.face_count()];
    let mut stack = vec![f];
    seen[f as usize] = true;
    while let Some(x) = stack.pop() {
        for &d in g.face_darts(x) {
            let (u, w) = (g.tail(d), g.head(d));
            if cut.contains(&(u.min(w), u.max(w))) {
                continue;
            }
            let y = g.face_of(g.rev(d));
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Whether the cycle separates the two boundary faces.
pub fn separates(mg: &MarkedPlaneGraph, cyc: &Cycle) -> bool {
    let g = mg.graph();
    let (Some(f1), Some(f2)) = (mg.mark_face(0), mg.mark_face(1)) else {
        // a vertex boundary lies on the cycle or strictly on one side
        return separates_sites(mg, cyc);
    };
    !side_of(g, &cyc.edge_set(), f1)[f2 as usize]
}

fn separates_sites(mg: &MarkedPlaneGraph, cyc: &Cycle) -> bool {
    let g = mg.graph();
    let cut = cyc.edge_set();
    let faces_at = |i: usize| -> Vec<u32> {
        match mg.marks()[i].site {
            MarkSite::Face(d) => vec![g.face_of(d)],
            MarkSite::Vertex(v) => {
                let a = g.first_dart(v);
                (0..g.degree(v) as u32).map(|k| g.face_of(a + k)).collect()
            }
        }
    };
    let (a, b) = (faces_at(0), faces_at(1));
    // each boundary must see exactly one side; the two sides must differ
    let side = side_of(g, &cut, a[0]);
    let in_a = a.iter().all(|&f| side[f as usize]);
    let b_out = b.iter().all(|&f| !side[f as usize]);
    in_a && b_out
}

/// Cycles of length at most 4 other than the boundaries, if all of them
/// separate the boundaries.
pub fn separating_cycles(mg: &MarkedPlaneGraph) -> Option<Vec<Cycle>> {
    let marks: Vec<Vec<(u32, u32)>> = (0..2)
        .filter(|&i| mg.mark_len(i) >= 3)
        .map(|i| {
            let mut e = mg.mark_edges(i);
            e.sort_unstable();
            e
        })
        .collect();
    let others: Vec<Cycle> = short_cycles(mg.graph(), 4).into_iter().filter(|c| !marks.contains(&c.edge_set())).collect();
    if others.iter().all(|c| separates(mg, c)) {
        Some(others)
    } else {
        None
    }
}

/// Exactly `k` short cycles besides the boundaries, all separating.
pub fn chain_ok(mg: &MarkedPlaneGraph, k: usize) -> bool {
    separating_cycles(mg).is_some_and(|c| c.len() == k)
}

/// The part of a cylinder graph between boundary `keep` and the
/// separating cycle `cyc`, with `cyc` as its other boundary (placed in the
/// same role as the boundary it replaces).
pub fn between(mg: &MarkedPlaneGraph, cyc: &Cycle, keep: usize) -> Option<MarkedPlaneGraph> {
    let g = mg.graph();
    let fk = mg.mark_face(keep)?;
    let cut = cyc.edge_set();
    let side = side_of(g, &cut, fk);
    let mut alive = vec![false; g.n()];
    let mut edge_alive: Vec<(u32, u32)> = Vec::new();
    for d in 0..g.dart_count() as u32 {
        let (u, w) = (g.tail(d), g.head(d));
        let e = (u.min(w), u.max(w));
        if side[g.face_of(d) as usize] || cut.contains(&e) {
            alive[u as usize] = true;
            alive[w as usize] = true;
            edge_alive.push(e);
        }
    }
    edge_alive.sort_unstable();
    edge_alive.dedup();
    let mut id = vec![u32::MAX; g.n()];
    let mut k = 0;
    for v in 0..g.n() {
        if alive[v] {
            id[v] = k;
            k += 1;
        }
    }
    let rot: Vec<Vec<u32>> = (0..g.n() as u32)
        .filter(|&v| alive[v as usize])
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| edge_alive.binary_search(&(v.min(w), v.max(w))).is_ok())
                .map(|&w| id[w as usize])
                .collect()
        })
        .collect();
    let h = PlaneGraph::from_rotations(rot).ok()?;
    let kd = g.face_darts(fk)[0];
    let hk = h.find_dart(id[g.tail(kd) as usize], id[g.head(kd) as usize])?;
    // the dart of a cycle edge whose face was on the removed side
    let (u, w) = (cyc.vertices[0], cyc.vertices[1]);
    let d = g.find_dart(u, w)?;
    let outer = if side[g.face_of(d) as usize] { g.rev(d) } else { d };
    let hc = h.find_dart(id[g.tail(outer) as usize], id[g.head(outer) as usize])?;
    let sites = if keep == 0 { [MarkSite::Face(hk), MarkSite::Face(hc)] } else { [MarkSite::Face(hc), MarkSite::Face(hk)] };
    MarkedPlaneGraph::cylinder(h, sites[0], sites[1]).ok()
}

/// Identifies boundary `C2` of `g1` with boundary `C1` of `g2`, starting
/// the walk of `g2` at dart `offset` of its face. The result has `C1` of
/// `g1` and `C2` of `g2` as boundaries.
pub fn glue_once(g1: &MarkedPlaneGraph, g2: &MarkedPlaneGraph, offset: usize) -> Result<MarkedPlaneGraph, EmbedError> {
    let (a, b) = (g1.graph(), g2.graph());
    let (Some(f1), Some(f2)) = (g1.mark_face(1), g2.mark_face(0)) else {
        return Err(EmbedError::BadMark("glued boundaries must be faces".into()));
    };
    let w1 = a.walk_from(a.face_darts(f1)[0]);
    let l = w1.len();
    if b.face_len(f2) != l {
        return Err(EmbedError::BadMark("glued boundaries differ in length".into()));
    }
    let w2 = b.walk_from(b.face_darts(f2)[offset % l]);
    let (mut m, de1) = Map::from_graph(a);
    let de2 = m.add_graph(b);
    let p: Vec<_> = w1[..l - 1].iter().map(|&d| edge_dart_of(a, &de1, d)).collect();
    let q: Vec<_> = w2[..l - 1].iter().map(|&d| edge_dart_of(b, &de2, d)).collect();
    zip_paths(&mut m, &p, edge_dart_of(a, &de1, w1[l - 1]), &q, edge_dart_of(b, &de2, w2[l - 1]))?;
    let m1 = match g1.marks()[0].site {
        MarkSite::Face(d) => edge_dart_of(a, &de1, d),
        MarkSite::Vertex(_) => return Err(EmbedError::BadMark("vertex boundary".into())),
    };
    // the parallel copies from g2 are the ones suppressed, so mark C2 by an
    // edge off the glued cycle
    let f2b = g2.mark_face(1).ok_or_else(|| EmbedError::BadMark("vertex boundary".into()))?;
    let glued: Vec<(u32, u32)> = g2.mark_edges(0);
    let d2 = b
        .face_darts(f2b)
        .iter()
        .copied()
        .find(|&d| {
            let (u, w) = (b.tail(d), b.head(d));
            !glued.contains(&(u.min(w), u.max(w)))
        })
        .ok_or_else(|| EmbedError::BadMark("boundaries coincide".into()))?;
    let m2 = edge_dart_of(b, &de2, d2);
    let (g, ds) = m.finish(&[m1, m2])?;
    MarkedPlaneGraph::cylinder(g, MarkSite::Face(ds[0]), MarkSite::Face(ds[1]))
}

/// Every identification of boundary `C2` of `g1` with boundary `C1` of
/// `g2`: all rotations, with `g2` as given and mirrored.
pub fn glue_at_cycle(g1: &MarkedPlaneGraph, g2: &MarkedPlaneGraph) -> Vec<MarkedPlaneGraph> {
    let l = g1.mark_len(1);
    if l != g2.mark_len(0) {
        return Vec::new();
    }
    let m2 = g2.mirror();
    let mut out = Vec::new();
    for h in [g2, &m2] {
        for off in 0..l {
            if let Ok(r) = glue_once(g1, h, off) {
                out.push(r);
            }
        }
    }
    out
}

/// Graphs obtained by suppressing one boundary vertex of degree 2 on a
/// 4-face boundary, turning it into a triangle.
pub fn suppressed_variants(mg: &MarkedPlaneGraph) -> Vec<MarkedPlaneGraph> {
    let g = mg.graph();
    let mut out = Vec::new();
    for i in 0..2 {
        let Some(f) = mg.mark_face(i) else { continue };
        if g.face_len(f) != 4 {
            continue;
        }
        let walk = g.walk_from(g.face_darts(f)[0]);
        let other = mg.mark_face(1 - i);
        for (k, &d) in walk.iter().enumerate() {
            let v = g.tail(d);
            if g.degree(v) != 2 {
                continue;
            }
            let prev = g.tail(walk[(k + 3) % 4]);
            let next = g.head(d);
            let Ok(h) = suppress_degree2(g, v) else { continue };
            let ren = |x: u32| if x > v { x - 1 } else { x };
            let Some(dm) = h.find_dart(ren(prev), ren(next)) else { continue };
            // a dart of the other boundary avoiding v
            let od = match (other, mg.marks()[1 - i].site) {
                (Some(of), _) => g.face_darts(of).iter().copied().find(|&x| g.tail(x) != v && g.head(x) != v),
                (None, _) => None,
            };
            let Some(od) = od else { continue };
            let Some(hod) = h.find_dart(ren(g.tail(od)), ren(g.head(od))) else { continue };
            let sites = if i == 0 { [MarkSite::Face(dm), MarkSite::Face(hod)] } else { [MarkSite::Face(hod), MarkSite::Face(dm)] };
            if let Ok(r) = MarkedPlaneGraph::cylinder(h, sites[0], sites[1]) {
                out.push(r);
            }
        }
    }
    out
}

struct Candidate {
    graph: MarkedPlaneGraph,
    key: Vec<u8>,
    provenance: GenerationRecord,
    derivations: u64,
}

/// Deduplicates candidates (already chain-checked) and keeps the critical ones.
fn settle(group: IsoGroup, raw: Vec<(MarkedPlaneGraph, GenerationRecord)>, rep: &mut LevelReport) -> Vec<CylEntry> {
    let keyed: Vec<(Vec<u8>, MarkedPlaneGraph, GenerationRecord)> =
        raw.into_par_iter().map(|(g, p)| (canonical_key(&g, group), g, p)).collect();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut cands: Vec<Candidate> = Vec::new();
    for (key, graph, provenance) in keyed {
        if let Some(&i) = index.get(&key) {
            rep.duplicate += 1;
            cands[i].derivations += 1;
            continue;
        }
        index.insert(key.clone(), cands.len());
        cands.push(Candidate { graph, key, provenance, derivations: 1 });
    }
    rep.tested += cands.len() as u64;
    let mut out: Vec<CylEntry> = cands
        .into_par_iter()
        .filter(|c| is_critical(&c.graph))
        .map(|c| {
            let meta = CylMeta::of(&c.graph);
            CylEntry { entry: Entry { graph: c.graph, key: c.key, provenance: c.provenance, derivations: c.derivations }, meta }
        })
        .collect();
    out.sort_by(|a, b| a.entry.key.cmp(&b.entry.key));
    rep.critical = out.len() as u64;
    rep.count = out.len();
    rep.class_c = out.iter().filter(|e| e.meta.class_c).count();
    out
}

/// Level-0 candidates from one disk graph.
fn close_up(h: &MarkedPlaneGraph, tag: &str) -> (Vec<(MarkedPlaneGraph, GenerationRecord)>, u64, u64, u64) {
    let l = h.mark_len(0);
    let (mut gen, mut invalid, mut short) = (0, 0, 0);
    let mut out = Vec::new();
    for s in SegmentSplit::all(l) {
        gen += 1;
        match identify_segments(h, s) {
            Ok(g) => {
                let detail = format!(
                    "{tag} start={} a1={} p={} a2={}{}",
                    s.start,
                    s.first,
                    s.path,
                    s.second,
                    if s.shared_edge { " shared" } else { "" }
                );
                out.push((g, GenerationRecord::new(OpKind::Identify, detail)));
            }
            Err(CylError::GirthViolation) => short += 1,
            Err(_) => invalid += 1,
        }
    }
    (out, gen, invalid, short)
}

/// Built cylinder levels.
#[derive(Debug, Clone)]
pub struct CylinderCatalog {
    group: IsoGroup,
    levels: Vec<Vec<CylEntry>>,
}

impl CylinderCatalog {
    /// Level 0 from the disk catalogs `K_5 ..= K_16`.
    pub fn from_disk(disk: &DiskCatalog) -> (Self, LevelReport) {
        let group = disk.group();
        let top = disk.max_len().min(MAX_CUT_LEN);
        let mut rep = LevelReport::default();
        let mut jobs: Vec<(usize, usize, &MarkedPlaneGraph)> = Vec::new();
        for l in 5..=top {
            for (k, e) in disk.level(l).iter().enumerate() {
                jobs.push((l, k, &e.graph));
            }
        }
        let results: Vec<_> = jobs.par_iter().map(|&(l, k, h)| close_up(h, &format!("K{l}#{k}"))).collect();
        let mut raw = Vec::new();
        for (gs, gen, invalid, short) in results {
            rep.generated += gen;
            rep.invalid += invalid;
            rep.short_cycle += short;
            raw.extend(gs);
        }
        let base = settle(group, raw, &mut rep);
        info!("cylinder level 0: {} members from {} closings", base.len(), rep.generated);
        (CylinderCatalog { group, levels: vec![base] }, rep)
    }

    /// Resumes from stored levels; metadata is recomputed.
    pub fn from_levels(group: IsoGroup, levels: Vec<Vec<MarkedPlaneGraph>>) -> Self {
        let levels = levels
            .into_iter()
            .map(|gs| {
                let mut es: Vec<CylEntry> = gs
                    .into_par_iter()
                    .map(|g| CylEntry {
                        meta: CylMeta::of(&g),
                        entry: Entry { key: canonical_key(&g, group), graph: g, provenance: GenerationRecord::new(OpKind::Loaded, ""), derivations: 1 },
                    })
                    .collect();
                es.sort_by(|a, b| a.entry.key.cmp(&b.entry.key));
                es
            })
            .collect();
        CylinderCatalog { group, levels }
    }

    pub fn group(&self) -> IsoGroup {
        self.group
    }

    /// Deepest level built.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[CylEntry] {
        &self.levels[k]
    }

    pub fn all(&self) -> impl Iterator<Item = (usize, &CylEntry)> {
        self.levels.iter().enumerate().flat_map(|(k, es)| es.iter().map(move |e| (k, e)))
    }

    /// Builds levels up to `k`.
    pub fn build_up_to(&mut self, k: usize) -> Vec<LevelReport> {
        let mut out = Vec::new();
        while self.depth() < k {
            out.push(self.build_next());
        }
        out
    }

    /// Glues level 0 onto the deepest level.
    pub fn build_next(&mut self) -> LevelReport {
        let k = self.depth() + 1;
        let mut rep = LevelReport { level: k, ..Default::default() };
        // both boundary orders of every member, with the matching c-values
        let orient = |es: &[CylEntry]| -> Vec<(MarkedPlaneGraph, CylMeta, usize, bool)> {
            es.iter()
                .enumerate()
                .flat_map(|(i, e)| [(e.entry.graph.clone(), e.meta, i, false), (e.entry.graph.swapped(), e.meta.swapped(), i, true)])
                .collect()
        };
        let base = orient(&self.levels[0]);
        let prev = orient(&self.levels[k - 1]);
        let mut pairs = Vec::new();
        for b in &base {
            for t in &prev {
                let l = b.1.lengths.1;
                if l != t.1.lengths.0 {
                    continue;
                }
                // a critical gluing needs enough non-extending colorings of C from both sides
                if b.1.c.0 + t.1.c.1 < boundary_colorings(l) {
                    rep.pruned += 1;
                    continue;
                }
                pairs.push((b, t));
            }
        }
        let results: Vec<(Vec<(MarkedPlaneGraph, GenerationRecord)>, u64, u64, u64)> = pairs
            .par_iter()
            .map(|(b, t)| {
                let tag = format!("L0#{}{} L{}#{}{}", b.2, if b.3 { "'" } else { "" }, k - 1, t.2, if t.3 { "'" } else { "" });
                let (mut gen, mut invalid, mut short) = (0u64, 0u64, 0u64);
                let mut out = Vec::new();
                let m2 = t.0.mirror();
                let l = b.1.lengths.1;
                for (mirror, h) in [(false, &t.0), (true, &m2)] {
                    for off in 0..l {
                        gen += 1;
                        match glue_once(&b.0, h, off) {
                            Ok(g) if chain_ok(&g, k) => {
                                out.push((g, GenerationRecord::new(OpKind::Glue, format!("{tag} off={off} mirror={}", mirror as u8))))
                            }
                            Ok(_) => short += 1,
                            Err(_) => invalid += 1,
                        }
                    }
                }
                (out, gen, invalid, short)
            })
            .collect();
        let mut raw = Vec::new();
        for (gs, gen, invalid, short) in results {
            rep.generated += gen;
            rep.invalid += invalid;
            rep.short_cycle += short;
            raw.extend(gs);
        }
        let mut found = settle(self.group, raw, &mut rep);
        // triangle boundaries from suppressing a degree-2 boundary vertex
        let extra: Vec<(MarkedPlaneGraph, GenerationRecord)> = found
            .iter()
            .flat_map(|e| {
                suppressed_variants(&e.entry.graph)
                    .into_iter()
                    .filter(|g| chain_ok(g, k))
                    .map(|g| (g, GenerationRecord::new(OpKind::Glue, format!("suppressed from {}", crate::catalog::hex(&e.entry.key)))))
                    .collect::<Vec<_>>()
            })
            .collect();
        if !extra.is_empty() {
            let known: std::collections::HashSet<Vec<u8>> = found.iter().map(|e| e.entry.key.clone()).collect();
            let fresh: Vec<_> = extra.into_iter().filter(|(g, _)| !known.contains(&canonical_key(g, self.group))).collect();
            if !fresh.is_empty() {
                let mut r2 = LevelReport::default();
                let more = settle(self.group, fresh, &mut r2);
                rep.tested += r2.tested;
                rep.duplicate += r2.duplicate;
                found.extend(more);
                found.sort_by(|a, b| a.entry.key.cmp(&b.entry.key));
                found.dedup_by(|a, b| a.entry.key == b.entry.key);
            }
        }
        rep.critical = found.len() as u64;
        rep.count = found.len();
        rep.class_c = found.iter().filter(|e| e.meta.class_c).count();
        info!("cylinder level {k}: {} members ({} class C)", rep.count, rep.class_c);
        self.levels.push(found);
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_class_c() {
        for n in 1..=4 {
            let g = class_c(n);
            assert!(chain_ok(&g, n - 1), "n = {n}");
        }
    }

    #[test]
    fn between_recovers_pieces() {
        let g = class_c(3);
        let cs = separating_cycles(&g).unwrap();
        assert_eq!(cs.len(), 2);
        for c in &cs {
            for keep in 0..2 {
                let h = between(&g, c, keep).unwrap();
                assert!(is_class_c(&h));
                assert!(is_critical(&h));
            }
        }
    }

    #[test]
    fn gluing_class_c_pieces() {
        // Z3 onto Z3 gives class-C graphs with one separating 4-cycle
        let z3 = class_c(1);
        let glued = glue_at_cycle(&z3, &z3);
        assert_eq!(glued.len(), 8);
        let crit: Vec<_> = glued.iter().filter(|g| chain_ok(g, 1) && is_critical(g)).collect();
        assert!(!crit.is_empty());
        assert!(crit.iter().any(|g| is_class_c(g)));
    }

    #[test]
    fn suppression_makes_triangles() {
        let v = suppressed_variants(&class_c(1));
        assert!(!v.is_empty());
        assert!(v.iter().all(|g| g.mark_len(0) + g.mark_len(1) == 7));
    }
}
