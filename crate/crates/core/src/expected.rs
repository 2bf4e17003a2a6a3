//! Published counts that verification runs are checked against. Each
//! constant names the claim it encodes.

/// Members of `K_i` (trivial member included), for outer lengths 13..=16.
pub const DISK_COUNTS: [(usize, usize); 4] = [(13, 108), (14, 427), (15, 1746), (16, 7969)];

/// Nontrivial members with no shortcut of length at most 2 and no two
/// adjacent degree-2 vertices, for outer lengths 13..=16.
pub const DISK_SPARSE_COUNTS: [(usize, usize); 4] = [(13, 0), (14, 8), (15, 13), (16, 76)];

/// Nontrivial members with no shortcut of length at most 4, for outer
/// lengths 5..=16: the single such graph with outer length at most 12 (a
/// decagon around a pentagon, so it sits at 10), and one each at 14 and 16.
pub const DISK_SHORTCUT_FREE: [(usize, usize); 12] =
    [(5, 0), (6, 0), (7, 0), (8, 0), (9, 0), (10, 1), (11, 0), (12, 0), (13, 0), (14, 1), (15, 0), (16, 1)];

/// Cylinder graphs without internal short cycles.
pub const CYL_BASE_COUNT: usize = 22;
/// The only base member at boundary distance three is `R`.
pub const CYL_BASE_DISTANCE3: usize = 1;
/// Level sizes counted from published drawings: one and two separating
/// short cycles.
pub const CYL_LEVEL_COUNTS: [(usize, usize); 2] = [(1, 33), (2, 31)];
/// Non-class-C members with at least three separating short cycles.
pub const CYL_DEEP_COUNT: usize = 12;

/// `(name, c(C1 -> C2), c(C2 -> C1))` for the base cylinder graphs.
pub const CTABLE_BASE: [(&str, usize, usize); 22] = [
    ("Z1", 15, 15),
    ("Z2", 12, 12),
    ("Z3", 16, 16),
    ("Z4", 5, 15),
    ("Z5", 4, 12),
    ("Z6", 4, 4),
    ("O1", 6, 6),
    ("O2", 12, 11),
    ("O3", 11, 11),
    ("O4", 12, 12),
    ("O5", 2, 6),
    ("O6", 4, 11),
    ("O7", 2, 2),
    ("T1", 8, 8),
    ("T2", 1, 2),
    ("T3", 4, 4),
    ("T4", 3, 3),
    ("T5", 2, 2),
    ("T6", 2, 2),
    ("T7", 2, 2),
    ("T8", 2, 2),
    ("R", 4, 4),
];

/// Level-1 table; primed names are second embeddings of the same graph.
pub const CTABLE_LEVEL1: [(&str, usize, usize); 33] = [
    ("D1", 12, 12),
    ("D2", 4, 12),
    ("D3", 8, 12),
    ("D4", 4, 8),
    ("D5", 15, 15),
    ("D6", 6, 6),
    ("D7", 11, 12),
    ("D8", 2, 6),
    ("D9", 2, 4),
    ("D10", 6, 4),
    ("D11", 6, 6),
    ("A1", 9, 9),
    ("A2", 1, 3),
    ("A3", 2, 3),
    ("A4", 4, 2),
    ("A5", 4, 6),
    ("A5'", 4, 6),
    ("A6", 2, 1),
    ("A7", 2, 3),
    ("A8", 10, 10),
    ("A9", 9, 8),
    ("A10", 2, 2),
    ("A11", 14, 14),
    ("A12", 4, 4),
    ("A12'", 4, 4),
    ("A13", 4, 4),
    ("X1", 9, 3),
    ("X2", 3, 3),
    ("X3", 1, 1),
    ("X4", 2, 1),
    ("X5", 4, 2),
    ("X5'", 4, 2),
    ("X6", 2, 1),
];

/// Level-2 table. Two row labels have no matching drawn graph.
pub const CTABLE_LEVEL2: [(&str, usize, usize); 31] = [
    ("Z4D2", 12, 12),
    ("Z4Z4", 12, 8),
    ("Z4D8", 6, 6),
    ("Z4Z9", 6, 4),
    ("O6D4", 8, 8),
    ("O6D9", 4, 4),
    ("Z4X1b", 9, 9),
    ("Z4X3", 1, 3),
    ("Z4X4a", 2, 3),
    ("Z4X4b", 2, 3),
    ("Z4X5", 4, 6),
    ("Z4X5'", 4, 6),
    ("Z4X6a", 2, 3),
    ("Z4X6b", 2, 3),
    ("Z5X5", 4, 6),
    ("Z5X5'", 4, 6),
    ("Z4X2", 3, 9),
    ("Z6X5", 4, 2),
    ("Z6X5'", 4, 2),
    ("Z1A1", 3, 3),
    ("Z4A1", 3, 1),
    ("Z4X1a", 1, 1),
    ("Z3A8a", 4, 4),
    ("Z3A8b", 8, 8),
    ("Z3A9a", 4, 4),
    ("Z3A9b", 4, 4),
    ("Z3A11a", 12, 12),
    ("Z3A11b", 12, 12),
    ("Z3A13", 4, 4),
    ("O4A8", 2, 2),
    ("O4A9", 2, 2),
];

/// Members of the six special lists of graphs that are far apart or have
/// a long face; `J4`, `J5` have one boundary shrunk to a vertex.
pub const FILTER_LISTS: [(char, &[&str]); 6] = [
    ('a', &["D9", "D10", "A12", "A12'", "Z4D8", "Z4D9", "O6D9", "Z5X5", "Z5X5'"]),
    ('b', &["R", "J5", "D9", "D10", "A10", "A12", "A12'", "Z4D4", "O6D4", "Z4X4b", "Z3A9b", "O4A9"]),
    ('c', &["R", "A12", "A12'", "Z4X4b"]),
    ('d', &["D6", "D10"]),
    ('e', &["J4", "J5", "D6", "D8", "D9", "D10", "Z4D8", "Z4D9", "O6D9"]),
    ('f', &["D9", "D10", "A7", "A12", "A12'"]),
];
