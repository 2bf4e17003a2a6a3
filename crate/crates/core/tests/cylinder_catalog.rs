//! Structural consistency of the cylinder catalog: names, pieces cut off
//! at separating cycles, soundness of the gluing prune, and the graphs
//! with a vertex boundary.

mod common;

use std::collections::HashSet;

use common::{report, world};
use critatlas::color::{c_pair, is_critical};
use critatlas::cylgen::filters::vertex_boundary_family;
use critatlas::cylgen::names::{check_table, same_graph};
use critatlas::cylgen::{between, boundary_colorings, chain_ok, glue_at_cycle, separating_cycles};
use critatlas::embed::canonical_key;

fn find<'a>(w: &'a common::World, level: usize, name: &str) -> Vec<usize> {
    (0..w.cyl.level(level).len()).filter(|&i| w.naming.name(level, i) == Some(name)).collect()
}

#[test]
fn names_land_on_the_right_members() {
    let w = world(false);
    let r = find(w, 0, "R");
    let r_ok = r.len() == 1 && w.cyl.level(0)[r[0]].meta.distance == 3;
    let (a, b) = (find(w, 1, "A12"), find(w, 1, "A12'"));
    let primed_ok = a.len() == 1
        && b.len() == 1
        && a != b
        && same_graph(&w.cyl.level(1)[a[0]].entry.graph, &w.cyl.level(1)[b[0]].entry.graph);
    let t2 = check_table(&w.cyl, &w.naming, 2).unwrap();
    let mut unmatched = t2.unmatched_rows.clone();
    unmatched.sort_unstable();
    // the two rows with no member of their own each have one unnamed
    // member with the same c-values
    let hinted = t2.hints.iter().all(|(_, same)| same.len() == 1);
    let ok = r_ok && primed_ok && unmatched == ["Z4Z4", "Z4Z9"] && hinted && t2.unnamed.len() == 2;
    report(
        "check (names: R at distance 3, A12/A12' one graph, unmatched level-2 rows reported)",
        ok,
        &format!("unmatched={unmatched:?} hints={:?}", t2.hints),
    );
    assert!(ok);
}

#[test]
fn pieces_at_separating_cycles_are_members() {
    let w = world(false);
    let group = w.cyl.group();
    let keys: HashSet<Vec<u8>> = w.cyl.all().map(|(_, e)| e.entry.key.clone()).collect();
    let (mut pieces, mut not_critical, mut missing) = (0, 0, 0);
    for (_, e) in w.cyl.all().filter(|(k, _)| *k > 0) {
        let mg = &e.entry.graph;
        for c in separating_cycles(mg).unwrap() {
            for keep in 0..2 {
                let p = between(mg, &c, keep).expect("separating cycle splits the graph");
                pieces += 1;
                if !is_critical(&p) {
                    not_critical += 1;
                }
                if !keys.contains(&canonical_key(&p, group)) {
                    missing += 1;
                }
            }
        }
    }
    let ok = pieces > 0 && not_critical == 0 && missing == 0;
    report(
        "check (both sides of every separating cycle are critical catalog members)",
        ok,
        &format!("pieces={pieces} not_critical={not_critical} missing={missing}"),
    );
    assert!(ok);
}

#[test]
fn pruned_gluings_are_never_critical() {
    let w = world(false);
    let base = w.cyl.level(0);
    let oriented: Vec<_> = base.iter().flat_map(|e| [e.entry.graph.clone(), e.entry.graph.swapped()]).collect();
    let (mut pairs, mut glued, mut critical) = (0, 0, 0);
    for b in &oriented {
        for t in &oriented {
            let l = b.mark_len(1);
            if l != t.mark_len(0) {
                continue;
            }
            let (cb, ct) = (c_pair(b), c_pair(t));
            if cb.0 + ct.1 >= boundary_colorings(l) {
                continue;
            }
            pairs += 1;
            for g in glue_at_cycle(b, t).into_iter().filter(|g| chain_ok(g, 1)) {
                glued += 1;
                critical += is_critical(&g) as usize;
            }
        }
    }
    let ok = pairs > 0 && critical == 0;
    report(
        "check (the c-value prune drops no critical level-1 gluing)",
        ok,
        &format!("pruned_pairs={pairs} gluings={glued} critical={critical}"),
    );
    assert!(ok);
}

#[test]
fn five_graphs_with_a_vertex_boundary() {
    let w = world(false);
    let js = vertex_boundary_family(&w.cyl);
    let sizes: Vec<usize> = js.iter().map(|e| e.graph.graph().n()).collect();
    let ok = js.len() == 5 && js.iter().all(|e| is_critical(&e.graph));
    report("check (five critical graphs with a precolored vertex)", ok, &format!("count={} vertices={sizes:?}", js.len()));
    assert!(ok);
}
