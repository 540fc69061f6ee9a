//! Reference data transcribed from printed tables and figures.
#![allow(dead_code)]

/// Column ids of the printed hom-dimension table.
pub const HOM_COLS: [&str; 30] = [
    "U_{0,1}",
    "U_{0,2}",
    "U_{0,3}",
    "U_{1,0}",
    "U_{1,1}",
    "U^{(1)}_{1,2}",
    "U^{(2)}_{1,2}",
    "U^{(1)}_{1,3}",
    "U^{(2)}_{1,3}",
    "U^{(3)}_{1,3}",
    "U_{1,4}",
    "U_{2,2}",
    "U^{(1)}_{2,3}",
    "U^{(2)}_{2,3}",
    "U^{(3)}_{2,3}",
    "U^{(1)}_{2,4}",
    "U^{(2)}_{2,4}",
    "U^{(1)}_{2,5}",
    "U^{(2)}_{2,5}",
    "U_{2,6}",
    "U_{3,3}",
    "U_{3,4}",
    "U^{(1)}_{3,5}",
    "U^{(2)}_{3,5}",
    "U_{3,6}",
    "U^{(1)}_{3,6}",
    "U^{(2)}_{3,6}",
    "U_{3,7}",
    "U_{4,6}",
    "U_{4,7}",
];

/// Row ids of the printed hom-dimension table, in printed order.
pub const HOM_ROWS: [&str; 30] = [
    "U_{0,1}",
    "U_{0,2}",
    "U_{1,0}",
    "U_{0,3}",
    "U_{1,1}",
    "U^{(1)}_{1,2}",
    "U^{(2)}_{1,2}",
    "U^{(1)}_{1,3}",
    "U^{(2)}_{1,3}",
    "U^{(3)}_{1,3}",
    "U_{1,4}",
    "U_{2,2}",
    "U^{(1)}_{2,3}",
    "U^{(2)}_{2,3}",
    "U^{(3)}_{2,3}",
    "U^{(1)}_{2,4}",
    "U^{(2)}_{2,4}",
    "U^{(1)}_{2,5}",
    "U^{(2)}_{2,5}",
    "U_{2,6}",
    "U_{3,3}",
    "U_{3,4}",
    "U^{(1)}_{3,5}",
    "U^{(2)}_{3,5}",
    "U_{3,6}",
    "U^{(1)}_{3,6}",
    "U^{(2)}_{3,6}",
    "U_{3,7}",
    "U_{4,6}",
    "U_{4,7}",
];

/// `HOM_TABLE[r][c] = dim Hom(HOM_ROWS[r], HOM_COLS[c])`.
pub const HOM_TABLE: [[usize; 30]; 30] = [
    [1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 3, 2, 3],
    [1, 2, 2, 0, 1, 2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 3, 3, 4, 4, 4, 2, 3, 4, 4, 4, 4, 4, 5, 4, 5],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 3, 0, 1, 2, 2, 3, 3, 3, 4, 2, 3, 3, 3, 4, 4, 5, 5, 6, 3, 4, 5, 5, 6, 6, 6, 7, 6, 7],
    [0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 2, 1, 1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 2, 2, 1, 2, 2, 3, 3],
    [1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 2, 2, 1, 2, 2, 2, 3, 2, 3, 2, 2, 2, 3, 3, 3, 2, 2, 4, 3, 4],
    [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4],
    [1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 3, 4, 4, 4, 5],
    [1, 2, 2, 1, 1, 2, 2, 2, 2, 3, 3, 2, 2, 2, 3, 3, 4, 4, 4, 4, 3, 4, 4, 5, 5, 4, 5, 6, 5, 6],
    [1, 2, 2, 1, 2, 2, 3, 2, 3, 3, 4, 2, 3, 3, 4, 4, 5, 5, 6, 6, 4, 5, 5, 6, 5, 5, 6, 7, 5, 8],
    [0, 0, 0, 2, 1, 0, 1, 0, 0, 1, 0, 2, 0, 1, 2, 0, 2, 0, 1, 0, 2, 2, 1, 2, 1, 0, 2, 1, 2, 2],
    [0, 0, 0, 2, 1, 0, 1, 0, 0, 1, 0, 2, 1, 1, 2, 0, 2, 0, 1, 0, 3, 2, 1, 2, 1, 0, 2, 1, 2, 2],
    [0, 0, 0, 2, 1, 1, 1, 0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 3, 3, 2, 3, 2, 1, 3, 2, 3, 3],
    [1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 2, 2, 1, 2, 3, 2, 3, 2, 3, 2, 3, 3, 3, 4, 3, 2, 4, 4, 4, 4],
    [0, 0, 0, 2, 2, 1, 2, 0, 1, 2, 1, 3, 2, 2, 3, 2, 3, 2, 3, 2, 4, 4, 3, 4, 3, 2, 4, 3, 4, 5],
    [1, 2, 2, 2, 2, 2, 3, 2, 2, 3, 3, 3, 2, 3, 4, 3, 5, 4, 5, 4, 4, 5, 5, 6, 5, 4, 6, 6, 6, 7],
    [1, 1, 1, 2, 2, 2, 3, 1, 2, 3, 3, 4, 3, 3, 4, 3, 5, 4, 5, 4, 5, 5, 5, 6, 5, 4, 6, 6, 6, 8],
    [1, 2, 2, 2, 2, 2, 3, 2, 3, 4, 4, 4, 3, 4, 5, 4, 6, 5, 6, 3, 5, 6, 6, 7, 7, 5, 7, 8, 6, 9],
    [1, 2, 2, 2, 2, 2, 3, 2, 3, 4, 4, 4, 4, 4, 5, 4, 6, 5, 6, 6, 6, 6, 6, 8, 7, 6, 8, 8, 8, 9],
    [0, 0, 0, 3, 1, 0, 1, 0, 0, 1, 0, 2, 0, 1, 2, 0, 2, 0, 1, 0, 3, 2, 1, 2, 1, 0, 2, 1, 2, 2],
    [0, 0, 0, 3, 2, 1, 2, 0, 1, 2, 1, 3, 2, 2, 4, 1, 3, 1, 3, 1, 4, 4, 3, 4, 3, 1, 4, 3, 4, 4],
    [0, 0, 0, 3, 2, 1, 2, 0, 1, 2, 1, 4, 2, 3, 4, 2, 4, 2, 3, 2, 5, 5, 4, 5, 4, 2, 5, 4, 5, 6],
    [1, 1, 1, 3, 2, 2, 3, 1, 2, 3, 3, 4, 2, 3, 4, 3, 5, 3, 5, 3, 5, 5, 5, 6, 5, 3, 6, 6, 6, 7],
    [1, 1, 1, 3, 2, 2, 3, 1, 2, 3, 3, 4, 3, 4, 5, 4, 5, 4, 5, 4, 6, 6, 5, 7, 6, 4, 7, 6, 7, 8],
    [0, 0, 0, 3, 2, 1, 2, 0, 1, 2, 2, 4, 3, 3, 4, 2, 4, 2, 3, 2, 6, 5, 4, 5, 4, 3, 4, 5, 6, 6],
    [1, 2, 2, 3, 2, 2, 3, 1, 2, 3, 3, 4, 3, 4, 5, 5, 6, 5, 6, 5, 6, 6, 6, 7, 7, 5, 8, 8, 8, 8],
    [1, 2, 2, 3, 3, 3, 4, 2, 3, 4, 4, 5, 4, 5, 6, 5, 7, 5, 7, 6, 7, 8, 7, 9, 8, 6, 9, 9, 8, 11],
    [0, 0, 0, 4, 2, 2, 2, 0, 1, 2, 2, 4, 2, 3, 4, 2, 4, 2, 3, 3, 6, 5, 4, 5, 4, 2, 5, 4, 3, 6],
    [1, 1, 1, 4, 3, 2, 3, 1, 2, 4, 3, 5, 3, 4, 6, 3, 6, 4, 6, 4, 7, 8, 6, 8, 6, 4, 8, 8, 7, 9],
];

/// Nodes of the printed Hasse diagram for blocks `(2, 2)` and nilpotency 3.
pub const HASSE22_NODES: [&[(&str, usize)]; 14] = [
    &[("U^{(1)}_{2,4}", 1)],
    &[("U^{(2)}_{2,4}", 1)],
    &[("U^{(1)}_{2,3}", 1), ("U_{0,1}", 1)],
    &[("U^{(2)}_{2,3}", 1), ("U_{0,1}", 1)],
    &[("U^{(3)}_{2,3}", 1), ("U_{0,1}", 1)],
    &[("U_{2,2}", 1), ("U_{0,2}", 1)],
    &[("U_{2,2}", 1), ("U_{0,1}", 2)],
    &[("U^{(1)}_{1,3}", 1), ("U_{1,1}", 1)],
    &[("U^{(2)}_{1,3}", 1), ("U_{1,1}", 1)],
    &[("U^{(3)}_{1,3}", 1), ("U_{1,1}", 1)],
    &[("U^{(1)}_{1,2}", 1), ("U^{(2)}_{1,2}", 1)],
    &[("U^{(1)}_{1,2}", 1), ("U_{1,1}", 1), ("U_{0,1}", 1)],
    &[("U^{(2)}_{1,2}", 1), ("U_{1,1}", 1), ("U_{0,1}", 1)],
    &[("U_{1,1}", 2), ("U_{0,1}", 2)],
];

/// Printed edges, 1-indexed into `HASSE22_NODES`, from the generic side down.
pub const HASSE22_EDGES: [(usize, usize); 20] = [
    (1, 3),
    (1, 8),
    (3, 9),
    (3, 4),
    (8, 9),
    (8, 4),
    (9, 2),
    (9, 10),
    (9, 11),
    (4, 6),
    (4, 12),
    (4, 11),
    (2, 5),
    (11, 12),
    (6, 7),
    (5, 13),
    (10, 13),
    (12, 13),
    (7, 13),
    (13, 14),
];

/// The six Borel patterns `(source, target)` inside the class with a loop at block 1 and
/// an arrow from block 2 to block 1, blocks `(3, 1)`.
pub const SIX_PATTERNS: [[(usize, usize); 2]; 6] =
    [[(1, 3), (4, 2)], [(2, 3), (4, 1)], [(1, 2), (4, 3)], [(3, 2), (4, 1)], [(2, 1), (4, 3)], [(3, 1), (4, 2)]];

/// Local chains of minimal degenerations: block sizes, classes given by block arrows
/// `(source, target)`, and cover edges between them.
pub struct Chain {
    pub blocks: &'static [usize],
    pub classes: &'static [&'static [(usize, usize)]],
    pub covers: &'static [(usize, usize)],
}

pub const CHAINS: [Chain; 7] = [
    Chain { blocks: &[2], classes: &[&[(1, 1)], &[]], covers: &[(0, 1)] },
    Chain { blocks: &[2, 1], classes: &[&[(1, 2)], &[(1, 1)], &[(2, 1)]], covers: &[(0, 1), (1, 2)] },
    Chain { blocks: &[1, 2], classes: &[&[(1, 2)], &[(2, 2)], &[(2, 1)]], covers: &[(0, 1), (1, 2)] },
    Chain {
        blocks: &[2, 2],
        classes: &[&[(1, 2), (1, 2)], &[(1, 2), (2, 1)], &[(1, 1), (2, 2)], &[(2, 1), (2, 1)]],
        covers: &[(0, 1), (1, 2), (2, 3)],
    },
    Chain {
        blocks: &[2, 1, 1],
        classes: &[&[(1, 3), (2, 1)], &[(1, 1), (2, 3)], &[(3, 1), (1, 2)], &[(1, 1), (3, 2)], &[(2, 1), (3, 1)]],
        covers: &[(0, 1), (1, 2), (2, 3), (3, 4)],
    },
    Chain {
        blocks: &[1, 2, 1],
        classes: &[
            &[(2, 2), (1, 3)],
            &[(1, 2), (2, 3)],
            &[(2, 1), (2, 3)],
            &[(1, 2), (3, 2)],
            &[(2, 1), (3, 2)],
            &[(2, 2), (3, 1)],
        ],
        covers: &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
    },
    Chain {
        blocks: &[1, 1, 2],
        classes: &[
            &[(1, 3), (2, 3)],
            &[(1, 2), (3, 3)],
            &[(1, 3), (3, 2)],
            &[(2, 3), (3, 1)],
            &[(2, 1), (3, 3)],
            &[(3, 2), (3, 1)],
        ],
        covers: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
    },
];

/// All compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
