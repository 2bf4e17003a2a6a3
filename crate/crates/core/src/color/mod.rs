//! Precoloring extension: proper 3-colorings of the marked subgraph,
//! extension decisions, criticality and non-extending counts.
//!
//! Public results use labeled colorings. Internally, precolorings are
//! reduced modulo permutations of the three colors.

pub(crate) mod engine;
pub mod oracle;

use engine::{canonical_code, canonical_precolorings, edge_witness, extending_codes, extends_fixed, Net, Variant};

use crate::embed::{MarkSite, MarkedPlaneGraph};

/// A coloring of marked vertices, `colors[i]` for `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Precoloring {
    pub vertices: Vec<u32>,
    pub colors: Vec<u8>,
}

impl Precoloring {
    pub fn color_of(&self, v: u32) -> Option<u8> {
        self.vertices.iter().position(|&x| x == v).map(|i| self.colors[i])
    }

    fn pairs(&self) -> impl Iterator<Item = (u32, u8)> + '_ {
        self.vertices.iter().copied().zip(self.colors.iter().copied())
    }
}

/// All labeled proper colorings of `vertices` with respect to `edges`
/// (index pairs), in lexicographic order.
fn labeled_colorings(vertices: &[u32], edges: &[(usize, usize)]) -> Vec<Precoloring> {
    let k = vertices.len();
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in edges {
        back[a.max(b)].push(a.min(b));
    }
    let mut out = Vec::new();
    let mut cols = vec![0u8; k];
    fn rec(i: usize, back: &[Vec<usize>], cols: &mut Vec<u8>, vs: &[u32], out: &mut Vec<Precoloring>) {
        if i == cols.len() {
            out.push(Precoloring { vertices: vs.to_vec(), colors: cols.clone() });
            return;
        }
        for c in 0..3 {
            if back[i].iter().all(|&j| cols[j] != c) {
                cols[i] = c;
                rec(i + 1, back, cols, vs, out);
            }
        }
    }
    rec(0, &back, &mut cols, vertices, &mut out);
    out
}

/// Labeled proper colorings of the union of all marks.
pub fn enumerate_precolorings(mg: &MarkedPlaneGraph) -> Vec<Precoloring> {
    let net = Net::new(mg);
    labeled_colorings(&net.s, &net.s_pairs)
}

/// Labeled proper colorings of mark `i` alone.
pub fn mark_colorings(mg: &MarkedPlaneGraph, i: usize) -> Vec<Precoloring> {
    let vs = mg.mark_vertices(i);
    let k = vs.len();
    let edges: Vec<(usize, usize)> = match mg.marks()[i].site {
        MarkSite::Face(_) => (0..k).map(|j| (j, (j + 1) % k)).collect(),
        MarkSite::Vertex(_) => Vec::new(),
    };
    labeled_colorings(&vs, &edges)
}

/// Whether `phi` extends to a proper 3-coloring of the whole graph.
pub fn extends(mg: &MarkedPlaneGraph, phi: &Precoloring) -> bool {
    let net = Net::new(mg);
    let fixed: Vec<(u32, u8)> = phi.pairs().collect();
    extends_fixed(&net, Variant::PLAIN, &fixed)
}

/// The precolorings of the marks that extend, over all proper precolorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTable {
    vertices: Vec<u32>,
    all: Vec<u64>,
    ext: Vec<u64>,
}

impl ExtensionTable {
    pub fn new(mg: &MarkedPlaneGraph) -> Self {
        let net = Net::new(mg);
        Self::from_net(&net, Variant::PLAIN)
    }

    fn from_net(net: &Net, var: Variant) -> Self {
        ExtensionTable { vertices: net.s.clone(), all: canonical_precolorings(net), ext: extending_codes(net, var) }
    }

    /// Table of the graph with edge `u-v` deleted; `None` if there is no
    /// such edge.
    pub fn without_edge(mg: &MarkedPlaneGraph, u: u32, v: u32) -> Option<Self> {
        let net = Net::new(mg);
        let e = net.edges.iter().position(|&x| x == (u.min(v), u.max(v)))? as u32;
        Some(Self::from_net(&net, Variant { skip: e, eq: None }))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Whether a proper precoloring extends.
    pub fn contains(&self, phi: &Precoloring) -> bool {
        let cols: Vec<u8> = self.vertices.iter().map(|&v| phi.color_of(v).expect("precoloring misses a marked vertex")).collect();
        self.ext.binary_search(&canonical_code(&cols)).is_ok()
    }

    /// Number of labeled proper precolorings.
    pub fn total(&self) -> usize {
        self.all.len() * self.orbit()
    }

    /// Number of labeled precolorings that extend.
    pub fn extending(&self) -> usize {
        self.ext.len() * self.orbit()
    }

    /// Whether every extending precoloring here also extends in `other`.
    pub fn is_subset_of(&self, other: &ExtensionTable) -> bool {
        self.ext.iter().all(|c| other.ext.binary_search(c).is_ok())
    }

    fn orbit(&self) -> usize {
        match self.vertices.len() {
            0 => 1,
            1 => 3,
            _ => 6,
        }
    }
}

/// Non-marked vertices of degree at most two rule out criticality.
fn has_light_interior_vertex(net: &Net) -> bool {
    (0..net.n).any(|v| !net.in_s[v] && net.adj[v].len() <= 2)
}

/// Whether the graph is critical with respect to its marks: no non-marked
/// vertex of degree at most two, and for every edge outside the marks some
/// precoloring extends after deleting it but not before.
pub fn is_critical(mg: &MarkedPlaneGraph) -> bool {
    let net = Net::new(mg);
    is_critical_net(&net)
}

pub(crate) fn is_critical_net(net: &Net) -> bool {
    if has_light_interior_vertex(net) {
        return false;
    }
    let all = canonical_precolorings(net);
    let ext = extending_codes(net, Variant::PLAIN);
    if ext.len() == all.len() && net.edge_in_s.iter().any(|&x| !x) {
        return false;
    }
    (0..net.edges.len() as u32).filter(|&e| !net.edge_in_s[e as usize]).all(|e| edge_witness(net, e, &ext, &all).is_some())
}

/// Whether one precoloring fails to extend to the graph but extends to
/// every proper subgraph containing the marks.
pub fn is_strongly_critical(mg: &MarkedPlaneGraph) -> bool {
    let net = Net::new(mg);
    if has_light_interior_vertex(&net) {
        return false;
    }
    let all = canonical_precolorings(&net);
    let ext = extending_codes(&net, Variant::PLAIN);
    let mut common: Option<Vec<u64>> = None;
    for e in (0..net.edges.len() as u32).filter(|&e| !net.edge_in_s[e as usize]) {
        let ext_e = extending_codes(&net, Variant { skip: e, eq: None });
        let gained: Vec<u64> = ext_e.into_iter().filter(|c| ext.binary_search(c).is_err()).collect();
        let next = match common {
            None => gained,
            Some(c) => c.into_iter().filter(|x| gained.binary_search(x).is_ok()).collect(),
        };
        if next.is_empty() {
            return false;
        }
        common = Some(next);
    }
    match common {
        Some(c) => !c.is_empty(),
        // no removable edges: the graph is its marked subgraph
        None => all.len() > ext.len() || net.edge_in_s.iter().all(|&x| x),
    }
}

/// Number of labeled colorings `phi` of mark `f2` such that `psi` (a
/// coloring of mark `f1`) together with `phi` does not extend. Colorings
/// disagreeing with `psi` on shared vertices count as non-extending.
pub fn count_nonextending(mg: &MarkedPlaneGraph, f1: usize, psi: &Precoloring, f2: usize) -> usize {
    debug_assert_eq!(psi.vertices, mg.mark_vertices(f1));
    let net = Net::new(mg);
    count_with(&net, psi, &mark_colorings(mg, f2))
}

fn count_with(net: &Net, psi: &Precoloring, phis: &[Precoloring]) -> usize {
    phis.iter()
        .filter(|phi| {
            let clash = phi.pairs().any(|(v, c)| psi.color_of(v).is_some_and(|p| p != c));
            if clash {
                return true;
            }
            let fixed: Vec<(u32, u8)> = psi.pairs().chain(phi.pairs()).collect();
            !extends_fixed(net, Variant::PLAIN, &fixed)
        })
        .count()
}

/// Maximum of `count_nonextending` over all colorings of mark `f1`.
pub fn c_max(mg: &MarkedPlaneGraph, f1: usize, f2: usize) -> usize {
    let net = Net::new(mg);
    let phis = mark_colorings(mg, f2);
    // the count is invariant under permuting colors, so canonical psi suffice
    mark_colorings(mg, f1)
        .iter()
        .filter(|psi| psi.colors.is_empty() || canonical_code(&psi.colors) == code_of(&psi.colors))
        .map(|psi| count_with(&net, psi, &phis))
        .max()
        .unwrap_or(0)
}

fn code_of(cols: &[u8]) -> u64 {
    cols.iter().fold(0u64, |acc, &c| (acc << 2) | c as u64)
}

/// Both directional c-values of a cylinder graph: `(c(C1, C2), c(C2, C1))`.
pub fn c_pair(mg: &MarkedPlaneGraph) -> (usize, usize) {
    (c_max(mg, 0, 1), c_max(mg, 1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{Mark, PlaneGraph, Role};

    fn square_pair(rot: Vec<Vec<u32>>, c1: (u32, u32), c2: (u32, u32)) -> MarkedPlaneGraph {
        let g = PlaneGraph::from_rotations(rot).unwrap();
        let d1 = g.find_dart(c1.0, c1.1).unwrap();
        let d2 = g.find_dart(c2.0, c2.1).unwrap();
        MarkedPlaneGraph::new(
            g,
            vec![Mark { role: Role::C1, site: MarkSite::Face(d1) }, Mark { role: Role::C2, site: MarkSite::Face(d2) }],
        )
        .unwrap()
    }

    #[test]
    fn precoloring_counts() {
        assert_eq!(enumerate_precolorings(&MarkedPlaneGraph::bare_cycle(3)).len(), 6);
        assert_eq!(enumerate_precolorings(&MarkedPlaneGraph::bare_cycle(4)).len(), 18);
        assert_eq!(enumerate_precolorings(&MarkedPlaneGraph::bare_cycle(16)).len(), 65538);
    }

    #[test]
    fn bare_cycle_is_strongly_critical() {
        let mg = MarkedPlaneGraph::bare_cycle(5);
        assert!(is_critical(&mg));
        assert!(is_strongly_critical(&mg));
        assert!(enumerate_precolorings(&mg).iter().all(|p| extends(&mg, p)));
    }

    #[test]
    fn two_squares_sharing_an_edge() {
        // 6-cycle 0..5 with chord 0-3: faces 0123 and 3450
        let mut rot: Vec<Vec<u32>> = (0..6u32).map(|v| vec![(v + 1) % 6, (v + 5) % 6]).collect();
        rot[0] = vec![1, 3, 5];
        rot[3] = vec![4, 0, 2];
        let mg = square_pair(rot, (0, 1), (3, 4));
        assert_eq!(mg.mark_len(0), 4);
        assert_eq!(mg.mark_len(1), 4);
        assert_eq!(c_pair(&mg), (15, 15));
        assert!(is_critical(&mg));
    }
}
