//! Catalogs `K_5 ..= K_max` of critical plane graphs of girth five whose
//! precolored outer face is a cycle of length `i`.
//!
//! `K_i` for `i >= 8` is the closure under outer-path insertion (`J`) of
//! the critical graphs among: gluings of two smaller members along outer
//! paths (`U`), subdivisions of `K_{i-1}` (`S`), and vertex splits of
//! smaller nontrivial members (`X`) with every internal face refilled by
//! catalog members.

pub mod ops;
pub mod structure;

use std::collections::{BTreeMap, HashMap};

use log::info;
use rayon::prelude::*;

use crate::catalog::{Entry, GenerationRecord, OpKind};
use crate::color::is_critical;
use crate::embed::{
    canonical_key, has_short_cycle, is_two_connected, key_digest, Dart, EmbedError, IsoGroup, KeyDigest, MarkedPlaneGraph,
};
use ops::{middle_degree, op_j, op_s, op_u, op_x, outer_walk, paste, Fill};

/// Smallest outer length with a nontrivial member.
pub const FIRST_NONTRIVIAL: usize = 8;

/// Counters for one operation along the generation funnel.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Funnel {
    pub generated: u64,
    /// Rejected by the embedding layer (loops, non-simple gluing).
    pub invalid: u64,
    pub short_cycle: u64,
    pub duplicate: u64,
    pub tested: u64,
    pub critical: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BuildReport {
    pub length: usize,
    pub funnel: BTreeMap<&'static str, Funnel>,
    pub j_rounds: usize,
    pub count: usize,
}

struct Candidate {
    graph: MarkedPlaneGraph,
    key: Vec<u8>,
    provenance: GenerationRecord,
    derivations: u64,
    critical: Option<bool>,
}

/// Deduplicating candidate pool for one outer length.
struct Pool {
    group: IsoGroup,
    seen: HashMap<KeyDigest, usize>,
    cands: Vec<Candidate>,
    funnel: BTreeMap<&'static str, Funnel>,
}

impl Pool {
    fn new(group: IsoGroup) -> Self {
        Pool { group, seen: HashMap::new(), cands: Vec::new(), funnel: BTreeMap::new() }
    }

    fn offer(&mut self, op: OpKind, r: Result<MarkedPlaneGraph, EmbedError>, detail: impl FnOnce() -> String) {
        let f = self.funnel.entry(op.as_str()).or_default();
        f.generated += 1;
        let mg = match r {
            Ok(mg) => mg,
            Err(_) => {
                f.invalid += 1;
                return;
            }
        };
        // the outer face is at least a 5-cycle, so any short cycle is fatal
        if has_short_cycle(mg.graph(), 4) {
            f.short_cycle += 1;
            return;
        }
        self.insert(op, mg, detail);
    }

    fn insert(&mut self, op: OpKind, mg: MarkedPlaneGraph, detail: impl FnOnce() -> String) {
        let f = self.funnel.entry(op.as_str()).or_default();
        let key = canonical_key(&mg, self.group);
        let dg = key_digest(&key);
        if let Some(&i) = self.seen.get(&dg) {
            f.duplicate += 1;
            self.cands[i].derivations += 1;
            return;
        }
        self.seen.insert(dg, self.cands.len());
        self.cands.push(Candidate {
            graph: mg,
            key,
            provenance: GenerationRecord::new(op, detail()),
            derivations: 1,
            critical: None,
        });
    }

    /// Tests criticality of candidates `from..`; returns the indices of
    /// critical ones.
    fn test_from(&mut self, from: usize) -> Vec<usize> {
        self.cands[from..].par_iter_mut().for_each(|c| c.critical = Some(is_critical(&c.graph)));
        let mut out = Vec::new();
        for i in from..self.cands.len() {
            let c = &self.cands[i];
            let f = self.funnel.entry(c.provenance.op.as_str()).or_default();
            f.tested += 1;
            if c.critical == Some(true) {
                f.critical += 1;
                out.push(i);
            }
        }
        out
    }
}

/// Outer darts at which a path may start, up to the symmetry of bare cycles.
fn path_starts(mg: &MarkedPlaneGraph) -> Vec<Dart> {
    if mg.is_trivial() {
        vec![mg.outer_dart()]
    } else {
        outer_walk(mg)
    }
}

/// The catalogs built so far, indexed by outer length.
#[derive(Debug, Clone)]
pub struct DiskCatalog {
    group: IsoGroup,
    levels: Vec<Vec<Entry>>,
    /// mirror images, aligned with `levels`
    mirrors: Vec<Vec<MarkedPlaneGraph>>,
}

impl DiskCatalog {
    /// `K_5`, `K_6`, `K_7`: the bare cycles only.
    pub fn new(group: IsoGroup) -> Self {
        let mut c = DiskCatalog { group, levels: vec![Vec::new(); 5], mirrors: vec![Vec::new(); 5] };
        for i in 5..FIRST_NONTRIVIAL {
            c.push_level(vec![c.cycle_entry(i)]);
        }
        c
    }

    /// Resumes from saved levels `5..5 + levels.len()`; keys are recomputed.
    pub fn from_graphs(group: IsoGroup, levels: Vec<Vec<MarkedPlaneGraph>>) -> Self {
        let mut c = DiskCatalog { group, levels: vec![Vec::new(); 5], mirrors: vec![Vec::new(); 5] };
        for gs in levels {
            let mut es: Vec<Entry> = gs
                .into_iter()
                .map(|g| Entry {
                    key: canonical_key(&g, group),
                    graph: g,
                    provenance: GenerationRecord::new(OpKind::Loaded, ""),
                    derivations: 1,
                })
                .collect();
            es.sort_by(|a, b| a.key.cmp(&b.key));
            c.push_level(es);
        }
        c
    }

    fn cycle_entry(&self, i: usize) -> Entry {
        let g = MarkedPlaneGraph::bare_cycle(i);
        Entry { key: canonical_key(&g, self.group), graph: g, provenance: GenerationRecord::new(OpKind::Base, format!("C{i}")), derivations: 1 }
    }

    fn push_level(&mut self, es: Vec<Entry>) {
        self.mirrors.push(es.iter().map(|e| e.graph.mirror()).collect());
        self.levels.push(es);
    }

    pub fn group(&self) -> IsoGroup {
        self.group
    }

    /// Largest outer length built.
    pub fn max_len(&self) -> usize {
        self.levels.len() - 1
    }

    /// Members of `K_i`, sorted by canonical key.
    pub fn level(&self, i: usize) -> &[Entry] {
        &self.levels[i]
    }

    pub fn graphs(&self, i: usize) -> impl Iterator<Item = &MarkedPlaneGraph> {
        self.levels[i].iter().map(|e| &e.graph)
    }

    /// Builds levels up to `max`.
    pub fn build_up_to(&mut self, max: usize) -> Vec<BuildReport> {
        let mut out = Vec::new();
        while self.max_len() < max {
            out.push(self.build_next());
        }
        out
    }

    /// Builds `K_{max_len + 1}`.
    pub fn build_next(&mut self) -> BuildReport {
        let i = self.max_len() + 1;
        let mut pool = Pool::new(self.group);
        self.gen_subdivisions(i, &mut pool);
        self.gen_gluings(i, &mut pool);
        self.gen_splits(i, &mut pool);
        let mut members = pool.test_from(0);
        info!("K{i}: {} candidates, {} critical before J-closure", pool.cands.len(), members.len());

        let mut frontier = members.clone();
        let mut rounds = 0;
        while !frontier.is_empty() {
            rounds += 1;
            let start = pool.cands.len();
            for &ci in &frontier {
                let g = pool.cands[ci].graph.clone();
                for (pos, d) in outer_walk(&g).into_iter().enumerate() {
                    pool.offer(OpKind::J, op_j(&g, d), || format!("cand{ci} p={pos}"));
                }
            }
            frontier = pool.test_from(start);
            info!("K{i}: J round {rounds}: {} new candidates, {} critical", pool.cands.len() - start, frontier.len());
            members.extend_from_slice(&frontier);
        }

        let mut entries: Vec<Entry> = members
            .into_iter()
            .map(|ci| {
                let c = &pool.cands[ci];
                Entry { graph: c.graph.clone(), key: c.key.clone(), provenance: c.provenance.clone(), derivations: c.derivations }
            })
            .collect();
        let cyc = self.cycle_entry(i);
        if !entries.iter().any(|e| e.key == cyc.key) {
            entries.push(cyc);
        }
        entries.sort_by(|a, b| a.key.cmp(&b.key));
        let report = BuildReport { length: i, funnel: pool.funnel, j_rounds: rounds, count: entries.len() };
        info!("K{i}: {} members", entries.len());
        self.push_level(entries);
        report
    }

    fn gen_subdivisions(&self, i: usize, pool: &mut Pool) {
        for (gi, e) in self.levels[i - 1].iter().enumerate() {
            for (pos, d) in outer_walk(&e.graph).into_iter().enumerate() {
                pool.offer(OpKind::S, op_s(&e.graph, d), || format!("K{}#{gi} e={pos}", i - 1));
            }
        }
    }

    fn gen_gluings(&self, i: usize, pool: &mut Pool) {
        for t in 1..=4 {
            for i1 in 5..i {
                let i2 = i + 2 * t - i1;
                if i2 < i1 || i2 >= i {
                    continue;
                }
                for (a, e1) in self.levels[i1].iter().enumerate() {
                    let starts1 = path_starts(&e1.graph);
                    for (b, e2) in self.levels[i2].iter().enumerate() {
                        if i1 == i2 && b < a {
                            continue;
                        }
                        let orients: &[bool] = if e2.graph.is_trivial() { &[false] } else { &[false, true] };
                        for &mirror in orients {
                            let h2 = if mirror { &self.mirrors[i2][b] } else { &e2.graph };
                            let starts2 = path_starts(h2);
                            for &d1 in &starts1 {
                                for &d2 in &starts2 {
                                    pool.offer(OpKind::U, op_u(&e1.graph, d1, h2, d2, t), || {
                                        format!("t={t} K{i1}#{a} d={d1} K{i2}#{b} d={d2} mirror={}", mirror as u8)
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn gen_splits(&self, i: usize, pool: &mut Pool) {
        for extra in 0..=1 {
            let src = i - extra - 1;
            for (gi, e) in self.levels[src].iter().enumerate() {
                // the split of a bare cycle leaves a face longer than `i`
                if e.graph.is_trivial() {
                    continue;
                }
                for d in outer_walk(&e.graph) {
                    for split in 2..=middle_degree(&e.graph, d) {
                        let x = op_x(&e.graph, d, split, extra);
                        let x = match x {
                            Ok(x) if !has_short_cycle(x.graph(), 4) => x,
                            other => {
                                pool.offer(OpKind::X, other, String::new);
                                continue;
                            }
                        };
                        assert!(is_two_connected(x.graph()), "split result is not 2-connected");
                        let tag = format!("K{src}#{gi} d={d} f={split} j={extra}");
                        self.paste_all(i, &x, &tag, pool);
                        pool.funnel.entry(OpKind::X.as_str()).or_default().generated += 1;
                        pool.insert(OpKind::X, x, || tag.clone());
                    }
                }
            }
        }
    }

    /// Offers every nontrivial filling of the internal faces of `x`.
    fn paste_all(&self, i: usize, x: &MarkedPlaneGraph, tag: &str, pool: &mut Pool) {
        let g = x.graph();
        let outer = x.mark_face(0).unwrap();
        // per fillable face: its first dart, length and nontrivial fillings
        let mut faces: Vec<(Dart, usize, Vec<usize>)> = Vec::new();
        for f in 0..g.face_count() as u32 {
            let l = g.face_len(f);
            if f == outer || l < FIRST_NONTRIVIAL {
                continue;
            }
            assert!(l < i, "internal face of length {l} in a split graph for K{i}");
            let nontrivial: Vec<usize> = (0..self.levels[l].len()).filter(|&k| !self.levels[l][k].graph.is_trivial()).collect();
            if !nontrivial.is_empty() {
                faces.push((g.face_darts(f)[0], l, nontrivial));
            }
        }
        if faces.is_empty() {
            return;
        }
        let options: Vec<usize> = faces.iter().map(|(_, l, nt)| nt.len() * 2 * l).collect();
        let fill_of = |face: usize, opt: usize| -> Fill<'_> {
            let (fd, l, ref nt) = faces[face];
            let idx = nt[opt / (2 * l)];
            let rem = opt % (2 * l);
            let graph = if rem >= l { &self.mirrors[l][idx] } else { &self.levels[l][idx].graph };
            Fill { face_dart: fd, graph, offset: rem % l }
        };
        // odometer; digit 0 leaves the face empty
        let mut digit = vec![0usize; faces.len()];
        loop {
            let mut k = 0;
            while k < faces.len() {
                digit[k] += 1;
                if digit[k] <= options[k] {
                    break;
                }
                digit[k] = 0;
                k += 1;
            }
            if k == faces.len() {
                break;
            }
            let fills: Vec<Fill<'_>> = (0..faces.len()).filter(|&f| digit[f] > 0).map(|f| fill_of(f, digit[f] - 1)).collect();
            pool.offer(OpKind::Paste, paste(x, &fills), || format!("{tag} fill={digit:?}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_levels_are_cycles() {
        let c = DiskCatalog::new(IsoGroup::Reflect);
        for i in 5..8 {
            assert_eq!(c.level(i).len(), 1);
            assert!(c.level(i)[0].graph.is_trivial());
        }
    }

    #[test]
    fn small_levels() {
        let mut c = DiskCatalog::new(IsoGroup::Reflect);
        c.build_up_to(10);
        // the double pentagon is the only nontrivial member at length 8
        assert_eq!(c.level(8).len(), 2);
        for i in 8..=10 {
            for e in c.level(i) {
                assert!(is_critical(&e.graph));
                assert!(e.graph.is_trivial() || structure::configuration(&e.graph).is_some());
            }
        }
    }
}
