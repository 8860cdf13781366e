//! Reference data: known polynomial expansions, tableau lists and small
//! crystal graphs, shared by the integration tests.
#![allow(dead_code)]

use crystal::graph::{Color, CrystalGraph};
use crystal::poly::SparsePolynomial;

/// The known expansion of `s_{(3,1)}(x_1, x_2, x_3)`.
pub const SCHUR_31_TERMS: [([u32; 3], i64); 12] = [
    ([3, 1, 0], 1),
    ([3, 0, 1], 1),
    ([2, 2, 0], 1),
    ([2, 1, 1], 2),
    ([2, 0, 2], 1),
    ([1, 3, 0], 1),
    ([1, 2, 1], 2),
    ([1, 1, 2], 2),
    ([1, 0, 3], 1),
    ([0, 3, 1], 1),
    ([0, 2, 2], 1),
    ([0, 1, 3], 1),
];

/// The known expansion of `P_{(3,1)}(x_1, x_2, x_3)`.
pub const SCHUR_P_31_TERMS: [([u32; 3], i64); 12] = [
    ([3, 1, 0], 1),
    ([3, 0, 1], 1),
    ([2, 2, 0], 2),
    ([2, 1, 1], 4),
    ([2, 0, 2], 2),
    ([1, 3, 0], 1),
    ([1, 2, 1], 4),
    ([1, 1, 2], 4),
    ([1, 0, 3], 1),
    ([0, 3, 1], 1),
    ([0, 2, 2], 2),
    ([0, 1, 3], 1),
];

pub fn polynomial(terms: &[([u32; 3], i64)]) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(3);
    for (e, c) in terms {
        p.add_term(e.to_vec(), *c);
    }
    p
}

/// The 24 semistandard shifted tableaux of shape (3,1) with entries ≤ 3,
/// rows listed bottom to top.
pub const SSHT_31: [&str; 24] = [
    "[[1,1,1],[2]]",
    "[[1,1,2],[2]]",
    "[[1,1,1],[3]]",
    "[[1,1,2'],[2]]",
    "[[1,2',2],[2]]",
    "[[1,1,3],[2]]",
    "[[1,1,2],[3]]",
    "[[1,1,2'],[3]]",
    "[[1,1,3'],[2]]",
    "[[1,2',3],[2]]",
    "[[1,1,3],[3]]",
    "[[1,2,2],[3]]",
    "[[1,2',2],[3]]",
    "[[1,1,3'],[3]]",
    "[[1,2',3'],[2]]",
    "[[1,2',3],[3]]",
    "[[1,2,3],[3]]",
    "[[2,2,2],[3]]",
    "[[1,2,3'],[3]]",
    "[[1,2',3'],[3]]",
    "[[1,3',3],[3]]",
    "[[2,2,3],[3]]",
    "[[2,2,3'],[3]]",
    "[[2,3',3],[3]]",
];

/// The six Yamanouchi shifted tableaux of shape (4,3,1).
pub const YAMANOUCHI_431: [&str; 6] = [
    "[[1,1,1,1],[2,2,2],[3]]",
    "[[1,1,1,1],[2,2,3'],[3]]",
    "[[1,1,1,2'],[2,2,3'],[3]]",
    "[[1,1,1,1],[2,2,4'],[3]]",
    "[[1,1,1,2'],[2,2,4'],[3]]",
    "[[1,1,1,3'],[2,2,4'],[3]]",
];

/// The crystal on shifted tableaux of shape (3,1), entries ≤ 3: named
/// vertices and their 1- and 2-edges.
pub const SHIFTED_31_VERTICES: [(&str, &str); 24] = [
    ("c1", "[[1,1,1],[2]]"),
    ("b2", "[[1,1,2],[2]]"),
    ("c2", "[[1,1,1],[3]]"),
    ("d2", "[[1,1,2'],[2]]"),
    ("a3", "[[1,2',2],[2]]"),
    ("b3", "[[1,1,3],[2]]"),
    ("c3", "[[1,1,2],[3]]"),
    ("d3", "[[1,1,2'],[3]]"),
    ("f3", "[[1,1,3'],[2]]"),
    ("a4", "[[1,2',3],[2]]"),
    ("b4", "[[1,1,3],[3]]"),
    ("c4", "[[1,2,2],[3]]"),
    ("d4", "[[1,2',2],[3]]"),
    ("e4", "[[1,1,3'],[3]]"),
    ("f4", "[[1,2',3'],[2]]"),
    ("a5", "[[1,2',3],[3]]"),
    ("b5", "[[1,2,3],[3]]"),
    ("c5", "[[2,2,2],[3]]"),
    ("d5", "[[1,2,3'],[3]]"),
    ("f5", "[[1,2',3'],[3]]"),
    ("b6", "[[1,3',3],[3]]"),
    ("c6", "[[2,2,3],[3]]"),
    ("d6", "[[2,2,3'],[3]]"),
    ("c7", "[[2,3',3],[3]]"),
];

pub const SHIFTED_31_ONE_EDGES: [(&str, &str); 13] = [
    ("c1", "b2"),
    ("b2", "a3"),
    ("c2", "c3"),
    ("b3", "a4"),
    ("c3", "c4"),
    ("d3", "d4"),
    ("f3", "f4"),
    ("b4", "b5"),
    ("c4", "c5"),
    ("e4", "d5"),
    ("b5", "c6"),
    ("d5", "d6"),
    ("b6", "c7"),
];

pub const SHIFTED_31_TWO_EDGES: [(&str, &str); 13] = [
    ("c1", "c2"),
    ("b2", "b3"),
    ("d2", "d3"),
    ("a3", "a4"),
    ("b3", "b4"),
    ("d3", "e4"),
    ("a4", "a5"),
    ("c4", "b5"),
    ("d4", "d5"),
    ("f4", "f5"),
    ("a5", "b6"),
    ("c5", "c6"),
    ("c6", "c7"),
];

/// The queer crystal on shifted tableaux of shape (2,1), entries ≤ 3.
pub const QUEER_21_VERTICES: [(&str, &str, [i64; 3]); 8] = [
    ("a11", "[[1,1],[2]]", [2, 1, 0]),
    ("b12", "[[1,1],[3]]", [2, 0, 1]),
    ("b10", "[[1,2'],[2]]", [1, 2, 0]),
    ("c11r", "[[1,2],[3]]", [1, 1, 1]),
    ("c11l", "[[1,2'],[3]]", [1, 1, 1]),
    ("d9", "[[1,3'],[3]]", [1, 0, 2]),
    ("d13", "[[2,2],[3]]", [0, 2, 1]),
    ("e11", "[[2,3'],[3]]", [0, 1, 2]),
];

pub const QUEER_21_EDGES: [(&str, u32, &str); 12] = [
    ("a11", 2, "b12"),
    ("b10", 2, "c11l"),
    ("c11l", 2, "d9"),
    ("d13", 2, "e11"),
    ("a11", 1, "b10"),
    ("b12", 1, "c11r"),
    ("c11r", 1, "d13"),
    ("d9", 1, "e11"),
    ("a11", 0, "b10"),
    ("d9", 0, "e11"),
    ("c11r", 0, "d13"),
    ("b12", 0, "c11l"),
];

/// The queer crystal with highest weight (3,0,0), as abstract vertices
/// with weights.
pub const QUEER_3_VERTICES: [(&str, [i64; 3]); 19] = [
    ("D1", [3, 0, 0]),
    ("C2", [2, 1, 0]),
    ("E2", [2, 1, 0]),
    ("B3", [1, 2, 0]),
    ("C3", [2, 0, 1]),
    ("D3", [1, 2, 0]),
    ("F3", [2, 0, 1]),
    ("A4", [0, 3, 0]),
    ("C4", [1, 1, 1]),
    ("D4", [1, 1, 1]),
    ("F4", [1, 1, 1]),
    ("G4", [1, 1, 1]),
    ("B5", [0, 2, 1]),
    ("C5", [1, 0, 2]),
    ("D5", [1, 0, 2]),
    ("F5", [0, 2, 1]),
    ("C6", [0, 1, 2]),
    ("E6", [0, 1, 2]),
    ("D7", [0, 0, 3]),
];

pub const QUEER_3_EDGES: [(&str, u32, &str); 29] = [
    ("D1", 1, "C2"),
    ("D1", 0, "E2"),
    ("C2", 1, "B3"),
    ("C2", 2, "C3"),
    ("C2", 0, "D3"),
    ("E2", 1, "D3"),
    ("E2", 2, "F3"),
    ("B3", 1, "A4"),
    ("B3", 0, "A4"),
    ("B3", 2, "C4"),
    ("C3", 1, "C4"),
    ("C3", 0, "D4"),
    ("D3", 2, "D4"),
    ("F3", 1, "F4"),
    ("F3", 0, "G4"),
    ("A4", 2, "B5"),
    ("C4", 1, "B5"),
    ("C4", 0, "B5"),
    ("C4", 2, "C5"),
    ("D4", 2, "D5"),
    ("F4", 1, "F5"),
    ("F4", 0, "F5"),
    ("B5", 2, "C6"),
    ("C5", 1, "C6"),
    ("C5", 0, "C6"),
    ("D5", 1, "E6"),
    ("F5", 2, "E6"),
    ("C6", 2, "D7"),
    // Forced by B1 since wt_1 + wt_2 > 0 at D5; it runs parallel to the
    // 1-edge, as in the k = 1 shape of {0,1}-components.
    ("D5", 0, "E6"),
];

/// Assembles a graph of dimension 3 from labelled vertices and edges.
pub fn assemble(vertices: &[(&str, [i64; 3])], edges: &[(&str, u32, &str)]) -> CrystalGraph {
    let mut g = CrystalGraph::new(3);
    for (name, w) in vertices {
        g.add_vertex(*name, w.to_vec());
    }
    for (s, c, d) in edges {
        let src = g.find(s).unwrap_or_else(|| panic!("unknown vertex {s}"));
        let dst = g.find(d).unwrap_or_else(|| panic!("unknown vertex {d}"));
        g.add_edge(src, Color::Even(*c), dst);
    }
    g
}
