//! Golden edge sets of the reference drawings, instantiated at p = 2, q = 3,
//! r = 5. Ideals are cyclic generators.

use crate::graph::GraphKind;

#[derive(Debug, Clone, Copy)]
pub struct Figure {
    pub name: &'static str,
    pub n: u64,
    pub kind: GraphKind,
    pub vertices: &'static [u64],
    pub edges: &'static [(u64, u64)],
}

pub const FIGURES: [Figure; 8] = [
    Figure {
        name: "A",
        n: 24,
        kind: GraphKind::Pis,
        vertices: &[2, 3, 4, 6, 8, 12],
        edges: &[
            (3, 6),
            (6, 4),
            (3, 12),
            (12, 2),
            (2, 8),
            (2, 4),
            (2, 6),
            (6, 8),
        ],
    },
    Figure {
        name: "B",
        n: 24,
        kind: GraphKind::Sii,
        vertices: &[2, 3, 4, 6, 8, 12],
        edges: &[
            (8, 4),
            (4, 3),
            (8, 2),
            (2, 12),
            (12, 6),
            (12, 3),
            (12, 4),
            (4, 6),
        ],
    },
    Figure {
        name: "C",
        n: 36,
        kind: GraphKind::Pis,
        vertices: &[2, 3, 4, 6, 9, 12, 18],
        edges: &[
            (4, 2),
            (4, 18),
            (4, 6),
            (12, 3),
            (12, 9),
            (12, 2),
            (2, 18),
            (2, 6),
            (6, 3),
            (18, 3),
            (9, 3),
            (9, 6),
        ],
    },
    Figure {
        name: "D",
        n: 36,
        kind: GraphKind::Sii,
        vertices: &[2, 3, 4, 6, 9, 12, 18],
        edges: &[
            (9, 18),
            (9, 2),
            (9, 6),
            (3, 12),
            (3, 4),
            (3, 18),
            (18, 2),
            (18, 6),
            (6, 12),
            (2, 12),
            (4, 12),
            (4, 6),
        ],
    },
    Figure {
        name: "E",
        n: 30,
        kind: GraphKind::Pis,
        vertices: &[2, 3, 5, 6, 10, 15],
        edges: &[
            (5, 15),
            (5, 10),
            (15, 3),
            (15, 6),
            (15, 10),
            (10, 6),
            (10, 2),
            (3, 6),
            (6, 2),
        ],
    },
    Figure {
        name: "F",
        n: 30,
        kind: GraphKind::Sii,
        vertices: &[2, 3, 5, 6, 10, 15],
        edges: &[
            (6, 2),
            (6, 3),
            (2, 10),
            (2, 5),
            (2, 3),
            (3, 5),
            (3, 15),
            (10, 5),
            (5, 15),
        ],
    },
    Figure {
        name: "G",
        n: 12,
        kind: GraphKind::Sii,
        vertices: &[2, 3, 4, 6],
        edges: &[(4, 2), (2, 3), (2, 6), (3, 6)],
    },
    Figure {
        name: "H",
        n: 18,
        kind: GraphKind::Sii,
        vertices: &[2, 3, 6, 9],
        edges: &[(9, 3), (3, 6), (3, 2), (6, 2)],
    },
];
