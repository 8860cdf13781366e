//! The queer operators `f_0`, `e_0` on shifted tableaux, the Weyl group
//! action `S_i` on crystal graphs, odd operators, queer highest weights, and
//! tensor products.

use crate::axioms::string_lengths_graph;
use crate::graph::{type_a_colors, Color, CrystalGraph, GraphError};
use crate::tableau::{Entry, ShiftedTableau};

/// `f_0`: none if `t` has no `1` or contains a `2'`; otherwise the rightmost
/// `1` of the first row becomes `2` on the diagonal and `2'` elsewhere.
pub fn f0_shifted(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    if t.cells().any(|(r, c)| t.get(r, c) == Some(Entry::marked(2))) {
        return None;
    }
    let row = t.rows().first()?;
    let k = row.iter().rposition(|e| e.value == 1)?;
    let col = k + 1;
    let new = if col == 1 { Entry::unmarked(2) } else { Entry::marked(2) };
    let mut u = t.clone();
    u.set(1, col, new);
    Some(u)
}

/// `e_0`: the leftmost `2'` of the first row becomes `1`; failing that, a
/// leftmost first-row entry `2` becomes `1`; otherwise none.
pub fn e0_shifted(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    let row = t.rows().first()?;
    let col = match row.iter().position(|&e| e == Entry::marked(2)) {
        Some(k) => k + 1,
        None if row[0] == Entry::unmarked(2) => 1,
        None => return None,
    };
    let mut u = t.clone();
    u.set(1, col, Entry::unmarked(1));
    Some(u)
}

/// The reflection `S_i` of `v` along its `i`-string: `f_i^d` when
/// `d = wt_i − wt_{i+1} ≥ 0`, else `e_i^{−d}`.
pub fn weyl_s(c: &CrystalGraph, v: usize, i: u32) -> Result<usize, GraphError> {
    let w = c.weight(v);
    let d = w[i as usize - 1] - w[i as usize];
    let color = Color::Even(i);
    let mut x = v;
    for _ in 0..d.unsigned_abs() {
        let next = if d > 0 { c.f(x, color) } else { c.e(x, color) };
        x = next.ok_or(GraphError::StringTruncated { vertex: x, color })?;
    }
    Ok(x)
}

/// The reduced word `s_2 ⋯ s_k s_1 ⋯ s_{k−1}` used to conjugate `f_0` into
/// `f_{k'}`, as a list of indices.
fn conjugating_word(k: u32) -> Vec<u32> {
    (2..=k).chain(1..k).collect()
}

/// Applies `S_{a_1} ∘ ⋯ ∘ S_{a_m}` (rightmost letter first).
fn apply_word(c: &CrystalGraph, v: usize, word: &[u32]) -> Result<usize, GraphError> {
    word.iter().rev().try_fold(v, |x, &i| weyl_s(c, x, i))
}

/// Conjugates `op` by `S_{w_k}`: `S_{w_k^{-1}} ∘ op ∘ S_{w_k}`.
fn conjugate(
    c: &CrystalGraph,
    v: usize,
    k: u32,
    op: impl Fn(usize) -> Option<usize>,
) -> Result<Option<usize>, GraphError> {
    let word = conjugating_word(k);
    let inverse: Vec<u32> = word.iter().rev().copied().collect();
    let u = apply_word(c, v, &word)?;
    match op(u) {
        Some(y) => apply_word(c, y, &inverse).map(Some),
        None => Ok(None),
    }
}

/// The odd lowering operator `f_{k'} = S_{w_k^{-1}} f_0 S_{w_k}`; `f_{1'} = f_0`.
pub fn odd_f(c: &CrystalGraph, v: usize, k: u32) -> Result<Option<usize>, GraphError> {
    conjugate(c, v, k, |u| c.f(u, Color::QUEER))
}

/// The odd raising operator `e_{k'} = S_{w_k^{-1}} e_0 S_{w_k}`, inverse to [`odd_f`].
pub fn odd_e(c: &CrystalGraph, v: usize, k: u32) -> Result<Option<usize>, GraphError> {
    conjugate(c, v, k, |u| c.e(u, Color::QUEER))
}

/// Vertices killed by every `e_i` (`0 ≤ i < n`) and every odd `e_{k'}`
/// (`2 ≤ k < n`; `e_{1'}` is `e_0`).
pub fn queer_highest_weights(c: &CrystalGraph) -> Result<Vec<usize>, GraphError> {
    let n = c.n() as u32;
    let even: Vec<Color> = (0..n).map(Color::Even).collect();
    let mut out = Vec::new();
    for v in c.highest_weights(&even) {
        let mut killed = true;
        for k in 2..n {
            if odd_e(c, v, k)?.is_some() {
                killed = false;
                break;
            }
        }
        if killed {
            out.push(v);
        }
    }
    Ok(out)
}

fn factor_payload(p: &str) -> String {
    if p.contains('⊗') {
        format!("({p})")
    } else {
        p.to_string()
    }
}

/// The tensor product `C1 ⊗ C2`. Vertex `(a, b)` has index `a·|C2| + b`, so
/// the right factor varies fastest. For `i ≥ 1`,
/// `f_i(a⊗b) = f_i(a)⊗b` if `ε_i(b) < φ_i(a)` and `a⊗f_i(b)` otherwise.
/// With `queer`, `f_0(a⊗b) = f_0(a)⊗b` if `wt(b)_1 = wt(b)_2 = 0` and
/// `a⊗f_0(b)` otherwise.
#[allow(clippy::needless_range_loop)] // vertices of both factors are addressed by index
pub fn tensor(c1: &CrystalGraph, c2: &CrystalGraph, queer: bool) -> Result<CrystalGraph, GraphError> {
    if c1.n() != c2.n() {
        return Err(GraphError::DimensionMismatch { left: c1.n(), right: c2.n() });
    }
    let n = c1.n();
    let colors = type_a_colors(n);
    let lengths = |g: &CrystalGraph| -> Result<Vec<Vec<(usize, usize)>>, GraphError> {
        (0..g.len()).map(|v| colors.iter().map(|&col| string_lengths_graph(g, v, col)).collect()).collect()
    };
    let l1 = lengths(c1)?;
    let l2 = lengths(c2)?;
    let m = c2.len();
    let mut g = CrystalGraph::new(n);
    for a in 0..c1.len() {
        for b in 0..m {
            let w: Vec<i64> = c1.weight(a).iter().zip(c2.weight(b)).map(|(x, y)| x + y).collect();
            g.add_vertex(format!("{} ⊗ {}", factor_payload(c1.payload(a)), factor_payload(c2.payload(b))), w);
        }
    }
    for a in 0..c1.len() {
        for b in 0..m {
            let src = a * m + b;
            if queer && n >= 2 {
                let wb = c2.weight(b);
                let dst = if wb[0] == 0 && wb[1] == 0 {
                    c1.f(a, Color::QUEER).map(|a2| a2 * m + b)
                } else {
                    c2.f(b, Color::QUEER).map(|b2| a * m + b2)
                };
                if let Some(dst) = dst {
                    g.add_edge(src, Color::QUEER, dst);
                }
            }
            for (k, &col) in colors.iter().enumerate() {
                let (phi_a, _) = l1[a][k];
                let (_, eps_b) = l2[b][k];
                let dst =
                    if eps_b < phi_a { c1.f(a, col).map(|a2| a2 * m + b) } else { c2.f(b, col).map(|b2| a * m + b2) };
                if let Some(dst) = dst {
                    g.add_edge(src, col, dst);
                }
            }
        }
    }
    Ok(g)
}

/// The `k`-fold tensor power `((C ⊗ C) ⊗ ⋯) ⊗ C`, for `k ≥ 1`.
pub fn tensor_power(c: &CrystalGraph, k: usize, queer: bool) -> Result<CrystalGraph, GraphError> {
    assert!(k >= 1, "tensor power needs at least one factor");
    let mut acc = c.clone();
    for _ in 1..k {
        acc = tensor(&acc, c, queer)?;
    }
    Ok(acc)
}
