//! Matches catalog members to the names of the published c-value tables.
//!
//! Each member gets the set of table names it can carry: the unordered
//! pair of c-values must agree, and so must whatever the name says about
//! the structure. Base names encode the boundary distance in their letter
//! (`Z` 0, `O` 1, `T` 2, `R` 3); one-cycle names encode the separating cycle
//! (`D` a triangle, `A` a 4-cycle between 4-faces, `X` a 4-cycle next to a
//! triangle boundary) and which base pieces they are glued from; two-cycle
//! names spell out their pieces. Primed names are a second embedding of
//! the same graph.

use std::collections::HashMap;

use petgraph::graph::UnGraph;

use crate::embed::{canonical_key, MarkedPlaneGraph};
use crate::expected::{CTABLE_BASE, CTABLE_LEVEL1, CTABLE_LEVEL2};

use super::{between, chain_ok, separating_cycles, CylEntry, CylinderCatalog};

type Row = (&'static str, usize, usize);

/// The table for a level, if one was published.
pub fn table(level: usize) -> Option<&'static [Row]> {
    match level {
        0 => Some(&CTABLE_BASE),
        1 => Some(&CTABLE_LEVEL1),
        2 => Some(&CTABLE_LEVEL2),
        _ => None,
    }
}

fn unordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Candidate names for every member of the named levels.
#[derive(Debug, Clone, Default)]
pub struct Naming {
    pub candidates: Vec<Vec<Vec<&'static str>>>,
    /// Names the member would get from its pieces when no table row fits.
    pub composed: Vec<Vec<Vec<String>>>,
}

impl Naming {
    /// The name, if exactly one fits.
    pub fn name(&self, level: usize, i: usize) -> Option<&'static str> {
        match self.candidates.get(level)?.get(i)?.as_slice() {
            [n] => Some(n),
            _ => None,
        }
    }

    /// Every name the member might carry: table names, else names composed
    /// from its pieces.
    pub fn labels(&self, level: usize, i: usize) -> Vec<String> {
        let c = self.candidates.get(level).and_then(|l| l.get(i));
        match c {
            Some(c) if !c.is_empty() => c.iter().map(|s| s.to_string()).collect(),
            _ => self.composed.get(level).and_then(|l| l.get(i)).cloned().unwrap_or_default(),
        }
    }

    /// Display label: the name, alternatives joined by `|`, or the position.
    pub fn label(&self, level: usize, i: usize) -> String {
        let ls = self.labels(level, i);
        if ls.is_empty() {
            format!("L{level}#{i}")
        } else {
            ls.join("|")
        }
    }
}

/// Base-level constraints a name places on a member.
fn base_fits(name: &str, e: &CylEntry) -> bool {
    let m = &e.meta;
    let n = e.entry.graph.graph().n();
    let lens = unordered(m.lengths.0, m.lengths.1);
    let dist = match name.as_bytes()[0] {
        b'Z' => 0,
        b'O' => 1,
        b'T' => 2,
        _ => 3,
    };
    if m.distance != dist {
        return false;
    }
    match name {
        "Z1" => m.trivial && lens == (4, 4) && n == 6,
        "Z2" => m.trivial && lens == (4, 4) && n == 7,
        "Z3" => m.class_c,
        "Z4" => m.trivial && lens == (3, 4) && n == 5,
        "Z5" => m.trivial && lens == (3, 4) && n == 6,
        "Z6" => m.trivial && lens == (3, 3),
        _ => !m.trivial && !m.class_c,
    }
}

fn has(pieces: (&str, &str), set: &[&str]) -> bool {
    set.contains(&pieces.0) || set.contains(&pieces.1)
}

/// One-cycle constraints: the family from the separating cycle, and the
/// base pieces the name is glued from.
fn level1_fits(name: &str, sep_len: usize, lens: (usize, usize), pieces: (&str, &str)) -> bool {
    let family = match (sep_len, lens) {
        (3, _) => 'D',
        (4, (4, 4)) => 'A',
        _ => 'X',
    };
    if !name.starts_with(family) {
        return false;
    }
    let z56 = ["Z5", "Z6"];
    match name {
        "D1" | "D2" => has(pieces, &z56) && has(pieces, &["Z4"]),
        "D3" | "D4" => has(pieces, &z56) && has(pieces, &["O6"]),
        "D5" | "D6" | "D8" => has(pieces, &["Z4"]) && !has(pieces, &["Z5", "Z6", "O6"]),
        "D7" => has(pieces, &["Z4"]) && has(pieces, &["O6"]),
        "D9" | "D10" | "D11" => has(pieces, &["O6"]) && !has(pieces, &["Z4", "Z5", "Z6"]),
        "A1" | "A2" | "A3" => has(pieces, &["Z1", "Z2", "O2"]),
        "A4" | "A5" | "A5'" | "A6" | "A7" => has(pieces, &["O2", "O3"]) && !has(pieces, &["Z1", "Z2"]),
        "A8" | "A9" | "A10" => has(pieces, &["O4"]) && !has(pieces, &["Z1", "Z2", "O2", "O3"]),
        "A11" | "A12" | "A12'" | "A13" => has(pieces, &["Z3"]) && !has(pieces, &["Z1", "Z2", "O2", "O3", "O4"]),
        _ => true,
    }
}

/// Splits a two-cycle name such as `Z4X5'a` into its base piece, its
/// one-cycle piece and the variant letter.
fn split_composed(name: &str) -> Option<(&str, &str)> {
    let stem = name.trim_end_matches(['a', 'b']);
    let b = stem.as_bytes();
    let mut k = 1;
    while k < b.len() && b[k].is_ascii_digit() {
        k += 1;
    }
    (k > 1 && k < b.len()).then(|| (&stem[..k], &stem[k..]))
}

struct Lookup<'a> {
    cat: &'a CylinderCatalog,
    keys: Vec<HashMap<Vec<u8>, usize>>,
}

impl<'a> Lookup<'a> {
    fn new(cat: &'a CylinderCatalog, depth: usize) -> Self {
        let keys = (0..=depth)
            .map(|k| cat.level(k).iter().enumerate().map(|(i, e)| (e.entry.key.clone(), i)).collect())
            .collect();
        Lookup { cat, keys }
    }

    fn find(&self, level: usize, g: &MarkedPlaneGraph) -> Option<usize> {
        self.keys.get(level)?.get(&canonical_key(g, self.cat.group())).copied()
    }
}

/// `(piece at boundary i, rest)` for both ends, as catalog positions at
/// levels 0 and `level - 1`.
fn end_pieces(look: &Lookup, level: usize, g: &MarkedPlaneGraph) -> Vec<(Option<usize>, Option<usize>, usize)> {
    let Some(cycles) = separating_cycles(g) else { return Vec::new() };
    let mut out = Vec::new();
    for i in 0..2 {
        for c in &cycles {
            let Some(near) = between(g, c, i) else { continue };
            if !chain_ok(&near, 0) {
                continue;
            }
            let rest = between(g, c, 1 - i);
            out.push((look.find(0, &near), rest.and_then(|r| look.find(level - 1, &r)), c.len()));
        }
    }
    out
}

/// Two embeddings of the same marked graph.
pub fn same_graph(a: &MarkedPlaneGraph, b: &MarkedPlaneGraph) -> bool {
    let build = |g: &MarkedPlaneGraph, swap: bool| -> UnGraph<u8, ()> {
        let pg = g.graph();
        let (m0, m1) = (g.mark_vertices(0), g.mark_vertices(1));
        let mut h = UnGraph::<u8, ()>::with_capacity(pg.n(), pg.m());
        for v in 0..pg.n() as u32 {
            let (x, y) = (m0.contains(&v) as u8, m1.contains(&v) as u8);
            h.add_node(if swap { y | x << 1 } else { x | y << 1 });
        }
        for (u, w) in pg.edges() {
            h.add_edge(u.into(), w.into(), ());
        }
        h
    };
    let ga = build(a, false);
    [false, true]
        .iter()
        .any(|&s| petgraph::algo::is_isomorphic_matching(&ga, &build(b, s), |x, y| x == y, |_, _| true))
}

fn resolve(cands: &mut [Vec<&'static str>], graphs: &[&MarkedPlaneGraph], rows: &[Row]) {
    // a name fixed for one member is not available to the others
    loop {
        let mut changed = false;
        for i in 0..cands.len() {
            if let [n] = cands[i][..] {
                if rows.iter().filter(|r| r.0 == n).count() == 1 {
                    for (j, c) in cands.iter_mut().enumerate() {
                        if j != i && c.contains(&n) {
                            c.retain(|&x| x != n);
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    // primed pairs are the two embeddings of one graph; the first in key
    // order takes the unprimed name
    for r in rows.iter().filter(|r| r.0.ends_with('\'')) {
        let (primed, plain) = (r.0, r.0.trim_end_matches('\''));
        let Some(plain) = rows.iter().map(|r| r.0).find(|&n| n == plain) else { continue };
        let holders: Vec<usize> = (0..cands.len()).filter(|&i| cands[i].contains(&primed) && cands[i].contains(&plain)).collect();
        let mut pairs = Vec::new();
        for (x, &i) in holders.iter().enumerate() {
            for &j in &holders[x + 1..] {
                if same_graph(graphs[i], graphs[j]) {
                    pairs.push((i, j));
                }
            }
        }
        if let [(i, j)] = pairs[..] {
            for (k, c) in cands.iter_mut().enumerate() {
                if k == i {
                    *c = vec![plain];
                } else if k == j {
                    *c = vec![primed];
                } else {
                    c.retain(|&x| x != plain && x != primed);
                }
            }
        }
    }
}

/// Candidate names for levels 0, 1 and 2 (as far as built).
pub fn assign_names(cat: &CylinderCatalog) -> Naming {
    let depth = cat.depth().min(2);
    let look = Lookup::new(cat, depth);
    let mut naming = Naming::default();
    for level in 0..=depth {
        let rows = table(level).unwrap();
        let es = cat.level(level);
        let mut cands: Vec<Vec<&'static str>> = Vec::with_capacity(es.len());
        let mut composed: Vec<Vec<String>> = Vec::with_capacity(es.len());
        for e in es {
            let pair = unordered(e.meta.c.0, e.meta.c.1);
            let by_c: Vec<&'static str> = rows.iter().filter(|r| unordered(r.1, r.2) == pair).map(|r| r.0).collect();
            let (fits, comp): (Vec<&'static str>, Vec<String>) = match level {
                0 => (by_c.into_iter().filter(|n| base_fits(n, e)).collect(), Vec::new()),
                _ => {
                    let ends = end_pieces(&look, level, &e.entry.graph);
                    let lens = unordered(e.meta.lengths.0, e.meta.lengths.1);
                    let piece_names = |lv: usize, p: Option<usize>| -> Vec<&'static str> {
                        p.map(|i| naming.candidates[lv][i].clone()).unwrap_or_default()
                    };
                    let mut fits = Vec::new();
                    let mut comp = Vec::new();
                    for &(near, rest, sep) in &ends {
                        let a = piece_names(0, near);
                        let b = piece_names(level - 1, rest);
                        for &x in &a {
                            for &y in &b {
                                if level == 2 {
                                    comp.push(format!("{x}{y}"));
                                }
                            }
                        }
                        for &n in &by_c {
                            let ok = if level == 1 {
                                a.iter().any(|&x| b.iter().any(|&y| level1_fits(n, sep, lens, (x, y))))
                            } else {
                                split_composed(n).is_some_and(|(p, q)| a.contains(&p) && b.contains(&q))
                            };
                            if ok && !fits.contains(&n) {
                                fits.push(n);
                            }
                        }
                    }
                    comp.sort();
                    comp.dedup();
                    (fits, comp)
                }
            };
            cands.push(fits);
            composed.push(comp);
        }
        let graphs: Vec<&MarkedPlaneGraph> = es.iter().map(|e| &e.entry.graph).collect();
        resolve(&mut cands, &graphs, rows);
        naming.candidates.push(cands);
        naming.composed.push(composed);
    }
    naming
}

/// Agreement between one level and its table.
#[derive(Debug, Clone)]
pub struct TableCheck {
    pub level: usize,
    pub rows: usize,
    pub members: usize,
    /// The unordered c-pairs of rows and members agree as multisets.
    pub c_pairs_match: bool,
    pub named: usize,
    /// Names no member can carry.
    pub unmatched_rows: Vec<&'static str>,
    /// Members with several possible names.
    pub ambiguous: Vec<(usize, Vec<&'static str>)>,
    /// Members no table name fits.
    pub unnamed: Vec<usize>,
    /// For each unmatched row, the labels of unnamed members with the same
    /// c-values (names composed from their pieces, when known).
    pub hints: Vec<(&'static str, Vec<String>)>,
}

pub fn check_table(cat: &CylinderCatalog, naming: &Naming, level: usize) -> Option<TableCheck> {
    let rows = table(level)?;
    let es = cat.level(level);
    let mut a: Vec<(usize, usize)> = rows.iter().map(|r| unordered(r.1, r.2)).collect();
    let mut b: Vec<(usize, usize)> = es.iter().map(|e| unordered(e.meta.c.0, e.meta.c.1)).collect();
    a.sort_unstable();
    b.sort_unstable();
    let cands = naming.candidates.get(level)?;
    let unmatched_rows = rows.iter().map(|r| r.0).filter(|n| !cands.iter().any(|c| c.contains(n))).collect();
    let ambiguous = cands.iter().enumerate().filter(|(_, c)| c.len() > 1).map(|(i, c)| (i, c.clone())).collect();
    let unnamed: Vec<usize> = cands.iter().enumerate().filter(|(_, c)| c.is_empty()).map(|(i, _)| i).collect();
    let hints = rows
        .iter()
        .filter(|r| !cands.iter().any(|c| c.contains(&r.0)))
        .map(|r| {
            let same: Vec<String> = unnamed
                .iter()
                .filter(|&&i| unordered(es[i].meta.c.0, es[i].meta.c.1) == unordered(r.1, r.2))
                .map(|&i| naming.label(level, i))
                .collect();
            (r.0, same)
        })
        .collect();
    Some(TableCheck {
        level,
        rows: rows.len(),
        members: es.len(),
        c_pairs_match: a == b,
        named: cands.iter().filter(|c| c.len() == 1).count(),
        unmatched_rows,
        ambiguous,
        unnamed,
        hints,
    })
}

/// TSV of `level, name, c(C1 -> C2), c(C2 -> C1)` for the named levels,
/// with each member oriented like its table row when it has one.
pub fn ctable_tsv(cat: &CylinderCatalog, naming: &Naming) -> String {
    let mut out = String::from("level\tname\tc12\tc21\tl1\tl2\tdistance\n");
    for level in 0..naming.candidates.len() {
        for (i, e) in cat.level(level).iter().enumerate() {
            let mut m = e.meta;
            if let Some(n) = naming.name(level, i) {
                let row = table(level).unwrap().iter().find(|r| r.0 == n).unwrap();
                if (m.c.0, m.c.1) != (row.1, row.2) {
                    m = m.swapped();
                }
            }
            out.push_str(&format!(
                "{level}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                naming.label(level, i),
                m.c.0,
                m.c.1,
                m.lengths.0,
                m.lengths.1,
                m.distance
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composed_names_split() {
        assert_eq!(split_composed("Z4X5'"), Some(("Z4", "X5'")));
        assert_eq!(split_composed("Z3A11b"), Some(("Z3", "A11")));
        assert_eq!(split_composed("O6D9"), Some(("O6", "D9")));
        assert_eq!(split_composed("R"), None);
    }

    #[test]
    fn mirror_is_the_same_graph() {
        let g = crate::cylgen::class_c_with(&[false, true, false]);
        assert!(same_graph(&g, &g.mirror()));
        assert!(same_graph(&g, &g.swapped()));
        assert!(!same_graph(&g, &crate::cylgen::class_c(2)));
    }

    #[test]
    fn families_from_cycle_lengths() {
        assert!(level1_fits("D7", 3, (3, 3), ("Z4", "O6")));
        assert!(!level1_fits("D7", 4, (4, 4), ("Z4", "O6")));
        assert!(level1_fits("A11", 4, (4, 4), ("Z3", "Z3")));
        assert!(!level1_fits("A11", 4, (4, 4), ("Z3", "O4")));
        assert!(level1_fits("X3", 4, (3, 4), ("Z4", "T1")));
    }
}
