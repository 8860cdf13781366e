//! Local axiom verification: Stembridge regularity (A1–A6), queer regularity
//! (B0–B6), and the shapes of two-colored components containing `0`-edges.
//!
//! String lengths are path lengths in the graph. For an `i`-edge `y → x`
//! (so `y = e_i x`) the differences are
//! `Δ_iε_j(x) = ε_j(x) − ε_j(y)` and `Δ_iφ_j(x) = φ_j(y) − φ_j(x)`;
//! for an `i`-edge `x → z` they are `∇_iε_j(x) = ε_j(z) − ε_j(x)` and
//! `∇_iφ_j(x) = φ_j(x) − φ_j(z)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{isomorphic, type_a_colors, Color, CrystalGraph, GraphError};

/// One failed axiom instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub axiom: String,
    /// Vertex ids in the JSON form (`v<index>`).
    pub vertices: Vec<String>,
    pub detail: String,
}

/// Outcome of a check: `ok` iff there are no violations. `notes` carries
/// informational findings that are not failures.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>, notes: Vec<String>) -> Self {
        Verdict { ok: violations.is_empty(), violations, notes }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Distinct axiom ids among the violations, sorted.
    pub fn axioms(&self) -> Vec<String> {
        let mut a: Vec<String> = self.violations.iter().map(|v| v.axiom.clone()).collect();
        a.sort();
        a.dedup();
        a
    }
}

/// Whether to collect every violation or stop at the first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    #[default]
    Exhaustive,
    Fast,
}

fn violation(axiom: &str, vertices: &[usize], detail: String) -> Violation {
    Violation { axiom: axiom.to_string(), vertices: vertices.iter().map(|v| format!("v{v}")).collect(), detail }
}

/// `(φ_c(v), ε_c(v))` as path lengths along color `c`.
pub fn string_lengths_graph(g: &CrystalGraph, v: usize, c: Color) -> Result<(usize, usize), GraphError> {
    let walk = |step: &dyn Fn(usize) -> Option<usize>| -> Result<usize, GraphError> {
        let mut x = v;
        let mut k = 0;
        while let Some(y) = step(x) {
            k += 1;
            if k > g.len() {
                return Err(GraphError::CycleDetected { vertex: v, color: c });
            }
            x = y;
        }
        Ok(k)
    };
    let phi = walk(&|x| g.f(x, c))?;
    let eps = walk(&|x| g.e(x, c))?;
    Ok((phi, eps))
}

/// Runs per-vertex checks, in parallel for exhaustive mode.
fn per_vertex(len: usize, mode: Mode, check: impl Fn(usize) -> Vec<Violation> + Sync) -> Vec<Violation> {
    match mode {
        Mode::Exhaustive => (0..len).into_par_iter().flat_map_iter(&check).collect(),
        Mode::Fast => (0..len).map(&check).find(|v| !v.is_empty()).unwrap_or_default(),
    }
}

fn finish(mut violations: Vec<Violation>, mode: Mode) -> Vec<Violation> {
    if mode == Mode::Fast {
        violations.truncate(1);
    }
    violations
}

/// First-edge functional walks may revisit a vertex only on a cycle.
fn check_cycles(g: &CrystalGraph, colors: &[Color]) -> Vec<Violation> {
    let mut out = Vec::new();
    for &c in colors {
        // 0 = unvisited, 1 = on the current walk, 2 = finished.
        let mut state = vec![0u8; g.len()];
        for start in 0..g.len() {
            let mut path = Vec::new();
            let mut x = start;
            loop {
                match state[x] {
                    2 => break,
                    1 => {
                        out.push(violation("A1", &[x], format!("{c}-colored cycle through v{x}")));
                        break;
                    }
                    _ => {}
                }
                state[x] = 1;
                path.push(x);
                match g.f(x, c) {
                    Some(y) => x = y,
                    None => break,
                }
            }
            for p in path {
                state[p] = 2;
            }
        }
    }
    out
}

fn check_uniqueness(g: &CrystalGraph, colors: &[Color], axiom: &str) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..g.len() {
        for &c in colors {
            let outs = g.out_edges(v).iter().filter(|e| e.0 == c).count();
            let ins = g.in_edges(v).iter().filter(|e| e.0 == c).count();
            if outs > 1 {
                out.push(violation(axiom, &[v], format!("{outs} outgoing {c}-edges")));
            }
            if ins > 1 {
                out.push(violation(axiom, &[v], format!("{ins} incoming {c}-edges")));
            }
        }
    }
    out
}

/// `α_i` for `i ≥ 1`; the queer color uses `α_1`.
fn root_index(c: Color) -> usize {
    (c.index().max(1) - 1) as usize
}

/// Edge and string-length compatibility with the weight map.
fn check_weights(g: &CrystalGraph, colors: &[Color], lengths: &Lengths, axiom: &str) -> Vec<Violation> {
    let mut out = Vec::new();
    for (v, vert) in g.vertices().iter().enumerate() {
        if vert.weight.len() != g.n() {
            out.push(violation(axiom, &[v], format!("weight has length {}, expected {}", vert.weight.len(), g.n())));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for e in g.edges().iter().filter(|e| colors.contains(&e.color)) {
        let k = root_index(e.color);
        let (ws, wd) = (g.weight(e.src), g.weight(e.dst));
        let expected: Vec<i64> = ws
            .iter()
            .enumerate()
            .map(|(m, &w)| {
                if m == k {
                    w - 1
                } else if m == k + 1 {
                    w + 1
                } else {
                    w
                }
            })
            .collect();
        if wd != expected.as_slice() {
            out.push(violation(
                axiom,
                &[e.src, e.dst],
                format!("{}-edge changes weight {:?} to {:?}, expected {:?}", e.color, ws, wd, expected),
            ));
        }
    }
    for v in 0..g.len() {
        for (ci, &c) in colors.iter().enumerate() {
            if c == Color::QUEER {
                continue;
            }
            let k = root_index(c);
            let w = g.weight(v);
            let (phi, eps) = lengths.at(v, ci);
            if phi as i64 - eps as i64 != w[k] - w[k + 1] {
                out.push(violation(
                    axiom,
                    &[v],
                    format!(
                        "φ_{c} − ε_{c} = {} but wt_{} − wt_{} = {}",
                        phi as i64 - eps as i64,
                        k + 1,
                        k + 2,
                        w[k] - w[k + 1]
                    ),
                ));
            }
        }
    }
    out
}

/// Precomputed `(φ, ε)` per vertex and color.
struct Lengths {
    table: Vec<Vec<(usize, usize)>>,
}

impl Lengths {
    fn new(g: &CrystalGraph, colors: &[Color]) -> Result<Self, GraphError> {
        let table = (0..g.len())
            .into_par_iter()
            .map(|v| colors.iter().map(|&c| string_lengths_graph(g, v, c)).collect())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Lengths { table })
    }

    fn at(&self, v: usize, ci: usize) -> (usize, usize) {
        self.table[v][ci]
    }

    fn phi(&self, v: usize, ci: usize) -> i64 {
        self.table[v][ci].0 as i64
    }

    fn eps(&self, v: usize, ci: usize) -> i64 {
        self.table[v][ci].1 as i64
    }
}

/// Checks the Stembridge axioms on the colors `1, …, n−1`, plus weight
/// compatibility (reported as `W`). Edges of other colors are ignored.
pub fn check_stembridge(g: &CrystalGraph, mode: Mode) -> Verdict {
    let colors = type_a_colors(g.n());
    Verdict::from_violations(stembridge_violations(g, &colors, mode), Vec::new())
}

fn stembridge_violations(g: &CrystalGraph, colors: &[Color], mode: Mode) -> Vec<Violation> {
    let cycles = check_cycles(g, colors);
    if !cycles.is_empty() {
        return finish(cycles, mode);
    }
    let mut out = check_uniqueness(g, colors, "A2");
    if mode == Mode::Fast && !out.is_empty() {
        return finish(out, mode);
    }
    let lengths = Lengths::new(g, colors).expect("acyclic graphs have finite strings");
    out.extend(check_weights(g, colors, &lengths, "W"));
    if mode == Mode::Fast && !out.is_empty() {
        return finish(out, mode);
    }
    let local = per_vertex(g.len(), mode, |x| local_stembridge(g, colors, &lengths, x));
    out.extend(local);
    finish(out, mode)
}

/// `ε_j(x) − ε_j(e_i x)` and `φ_j(e_i x) − φ_j(x)`.
fn delta(l: &Lengths, x: usize, y: usize, j: usize) -> (i64, i64) {
    (l.eps(x, j) - l.eps(y, j), l.phi(y, j) - l.phi(x, j))
}

/// `ε_j(f_i x) − ε_j(x)` and `φ_j(x) − φ_j(f_i x)`.
fn nabla(l: &Lengths, x: usize, z: usize, j: usize) -> (i64, i64) {
    (l.eps(z, j) - l.eps(x, j), l.phi(x, j) - l.phi(z, j))
}

fn path(g: &CrystalGraph, x: usize, steps: &[(Color, bool)]) -> Option<usize> {
    // Steps are applied left to right; `true` means lowering.
    steps.iter().try_fold(x, |v, &(c, down)| if down { g.f(v, c) } else { g.e(v, c) })
}

fn local_stembridge(g: &CrystalGraph, colors: &[Color], l: &Lengths, x: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    let expected_sum = |i: usize, j: usize| -> i64 {
        let (a, b) = (colors[i].index() as i64, colors[j].index() as i64);
        match (a - b).abs() {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    };
    for (i, &ci) in colors.iter().enumerate() {
        if let Some(y) = g.e(x, ci) {
            for (j, &cj) in colors.iter().enumerate() {
                let (de, dp) = delta(l, x, y, j);
                if de + dp != expected_sum(i, j) {
                    out.push(violation(
                        "A3",
                        &[x, y],
                        format!("Δ_{ci}ε_{c} + Δ_{ci}φ_{c} = {} (expected {})", de + dp, expected_sum(i, j), c = cj),
                    ));
                }
                if j != i && (de > 0 || dp > 0) {
                    out.push(violation(
                        "A4",
                        &[x, y],
                        format!("Δ_{ci}ε_{c} = {de}, Δ_{ci}φ_{c} = {dp}; both must be ≤ 0", c = cj),
                    ));
                }
            }
        }
        if let Some(z) = g.f(x, ci) {
            for (j, &cj) in colors.iter().enumerate() {
                let (ne, np) = nabla(l, x, z, j);
                if ne + np != expected_sum(i, j) {
                    out.push(violation(
                        "A3",
                        &[x, z],
                        format!("∇_{ci}ε_{c} + ∇_{ci}φ_{c} = {} (expected {})", ne + np, expected_sum(i, j), c = cj),
                    ));
                }
                if j != i && (ne > 0 || np > 0) {
                    out.push(violation(
                        "A4",
                        &[x, z],
                        format!("∇_{ci}ε_{c} = {ne}, ∇_{ci}φ_{c} = {np}; both must be ≤ 0", c = cj),
                    ));
                }
            }
        }
    }
    for (i, &ci) in colors.iter().enumerate() {
        for (j, &cj) in colors.iter().enumerate() {
            if i == j {
                continue;
            }
            let up = |s: &[Color]| path(g, x, &s.iter().map(|&c| (c, false)).collect::<Vec<_>>());
            let down = |s: &[Color]| path(g, x, &s.iter().map(|&c| (c, true)).collect::<Vec<_>>());
            if let (Some(yi), Some(_)) = (g.e(x, ci), g.e(x, cj)) {
                let de_ij = delta(l, x, yi, j).0;
                // A5: e_i e_j x = e_j e_i x = y and ∇_j φ_i(y) = 0.
                if de_ij == 0 {
                    let a = up(&[cj, ci]);
                    let b = up(&[ci, cj]);
                    match (a, b) {
                        (Some(a), Some(b)) if a == b => {
                            let ok = g.f(a, cj).map(|z| nabla(l, a, z, i).1 == 0).unwrap_or(false);
                            if !ok {
                                out.push(violation(
                                    "A5",
                                    &[x, a],
                                    format!("∇_{cj}φ_{ci} ≠ 0 at the top of the {ci},{cj} square"),
                                ));
                            }
                        }
                        _ => out.push(violation(
                            "A5",
                            &[x],
                            format!("Δ_{ci}ε_{cj} = 0 but e_{ci}e_{cj} and e_{cj}e_{ci} disagree"),
                        )),
                    }
                }
                // A6: e_i e_j² e_i x = e_j e_i² e_j x = y with ∇_iφ_j(y) = ∇_jφ_i(y) = −1.
                if i < j {
                    let yj = g.e(x, cj).expect("checked above");
                    let de_ji = delta(l, x, yj, i).0;
                    if de_ij == -1 && de_ji == -1 {
                        let a = up(&[ci, cj, cj, ci]);
                        let b = up(&[cj, ci, ci, cj]);
                        match (a, b) {
                            (Some(a), Some(b)) if a == b => {
                                let ni = g.f(a, ci).map(|z| nabla(l, a, z, j).1);
                                let nj = g.f(a, cj).map(|z| nabla(l, a, z, i).1);
                                if ni != Some(-1) || nj != Some(-1) {
                                    out.push(violation(
                                        "A6",
                                        &[x, a],
                                        format!(
                                            "∇ values {ni:?}, {nj:?} at the top of the {ci},{cj} octagon; expected −1"
                                        ),
                                    ));
                                }
                            }
                            _ => out.push(violation(
                                "A6",
                                &[x],
                                format!("Δ_{ci}ε_{cj} = Δ_{cj}ε_{ci} = −1 but the {ci},{cj} octagon does not close"),
                            )),
                        }
                    }
                }
            }
            if let (Some(zi), Some(_)) = (g.f(x, ci), g.f(x, cj)) {
                let np_ij = nabla(l, x, zi, j).1;
                if np_ij == 0 {
                    let a = down(&[cj, ci]);
                    let b = down(&[ci, cj]);
                    match (a, b) {
                        (Some(a), Some(b)) if a == b => {
                            let ok = g.e(a, cj).map(|y| delta(l, a, y, i).0 == 0).unwrap_or(false);
                            if !ok {
                                out.push(violation(
                                    "A5",
                                    &[x, a],
                                    format!("Δ_{cj}ε_{ci} ≠ 0 at the bottom of the {ci},{cj} square"),
                                ));
                            }
                        }
                        _ => out.push(violation(
                            "A5",
                            &[x],
                            format!("∇_{ci}φ_{cj} = 0 but f_{ci}f_{cj} and f_{cj}f_{ci} disagree"),
                        )),
                    }
                }
                if i < j {
                    let zj = g.f(x, cj).expect("checked above");
                    let np_ji = nabla(l, x, zj, i).1;
                    if np_ij == -1 && np_ji == -1 {
                        let a = down(&[ci, cj, cj, ci]);
                        let b = down(&[cj, ci, ci, cj]);
                        match (a, b) {
                            (Some(a), Some(b)) if a == b => {
                                let di = g.e(a, ci).map(|y| delta(l, a, y, j).0);
                                let dj = g.e(a, cj).map(|y| delta(l, a, y, i).0);
                                if di != Some(-1) || dj != Some(-1) {
                                    out.push(violation("A6", &[x, a], format!("Δ values {di:?}, {dj:?} at the bottom of the {ci},{cj} octagon; expected −1")));
                                }
                            }
                            _ => out.push(violation(
                                "A6",
                                &[x],
                                format!("∇_{ci}φ_{cj} = ∇_{cj}φ_{ci} = −1 but the {ci},{cj} octagon does not close"),
                            )),
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks the queer-regular axioms B0–B6. Weight compatibility of
/// `0`-edges (each lowers the weight by `α_1`) is reported as `W0`.
pub fn check_queer_regular(g: &CrystalGraph, mode: Mode) -> Verdict {
    let n = g.n();
    let plus = type_a_colors(n);
    let mut out: Vec<Violation> = stembridge_violations(g, &plus, mode)
        .into_iter()
        .map(|v| Violation {
            axiom: "B0".to_string(),
            vertices: v.vertices,
            detail: format!("{}: {}", v.axiom, v.detail),
        })
        .collect();
    if mode == Mode::Fast && !out.is_empty() {
        return Verdict::from_violations(out, Vec::new());
    }
    if !out.iter().all(|v| !v.detail.starts_with("A1")) {
        return Verdict::from_violations(out, Vec::new());
    }
    // Color 0 first, so that index k of `colors` is the color k.
    let colors: Vec<Color> = (0..n.max(1) as u32).map(Color::Even).collect();
    let uniq = check_uniqueness(g, &[Color::QUEER], "B2");
    let zero_cycles = check_cycles(g, &[Color::QUEER]);
    if !zero_cycles.is_empty() {
        out.extend(zero_cycles.into_iter().map(|v| Violation { axiom: "B1".to_string(), ..v }));
        out.extend(uniq);
        return Verdict::from_violations(finish(out, mode), Vec::new());
    }
    out.extend(uniq);
    let lengths = Lengths::new(g, &colors).expect("acyclic");
    out.extend(check_weights(g, &[Color::QUEER], &lengths, "W0"));
    if mode == Mode::Fast && !out.is_empty() {
        return Verdict::from_violations(finish(out, mode), Vec::new());
    }
    out.extend(per_vertex(g.len(), mode, |x| local_queer(g, &colors, &lengths, x)));
    Verdict::from_violations(finish(out, mode), Vec::new())
}

fn local_queer(g: &CrystalGraph, colors: &[Color], l: &Lengths, x: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    let zero = Color::QUEER;
    let w = g.weight(x);
    // B1
    let (phi0, eps0) = l.at(x, 0);
    if phi0 + eps0 > 1 {
        out.push(violation("B1", &[x], format!("0-string of length {} through v{x}", phi0 + eps0)));
    }
    let positive = w.len() >= 2 && w[0] + w[1] > 0;
    if (phi0 + eps0 == 1) != positive {
        out.push(violation(
            "B1",
            &[x],
            format!(
                "ε_0 + φ_0 = {} while wt_1 + wt_2 = {}",
                phi0 + eps0,
                w.first().copied().unwrap_or(0) + w.get(1).copied().unwrap_or(0)
            ),
        ));
    }
    if let Some(y) = g.e(x, zero) {
        for (k, &ck) in colors.iter().enumerate() {
            let (de, dp) = delta(l, x, y, k);
            let i = ck.index();
            // B3
            let expected = match i {
                0 | 1 => 2,
                2 => -1,
                _ => 0,
            };
            if de + dp != expected {
                out.push(violation("B3", &[x, y], format!("Δ_0ε_{i} + Δ_0φ_{i} = {} (expected {expected})", de + dp)));
            }
            // B4
            let ok = match i {
                0 => true,
                1 => de >= 0 && dp > 0,
                2 => de <= 0 && dp <= 0,
                _ => de == 0 && dp == 0,
            };
            if !ok {
                out.push(violation("B4", &[x, y], format!("Δ_0ε_{i} = {de}, Δ_0φ_{i} = {dp}")));
            }
        }
        // B6
        if colors.len() > 1 {
            let (de1, _) = delta(l, x, y, 1);
            if de1 == 1 && (l.phi(x, 1) != 0 || g.e(x, colors[1]) != Some(y)) {
                out.push(violation("B6", &[x, y], "Δ_0ε_1 = 1 requires φ_1 = 0 and e_1 = e_0".to_string()));
            }
        }
        if colors.len() > 2 {
            let (_, dp2) = delta(l, x, y, 2);
            if (dp2 == 0) != (l.phi(x, 2) == 0) {
                out.push(violation("B6", &[x, y], format!("Δ_0φ_2 = {dp2} while φ_2 = {}", l.phi(x, 2))));
            }
        }
    }
    // B5, with x playing the role of z.
    for &ci in colors.iter().skip(1) {
        let i = ci.index();
        if i >= 2 {
            if let (Some(a), Some(b)) = (g.f(x, ci), g.f(x, zero)) {
                let left = g.f(b, ci);
                let right = g.f(a, zero);
                if left.is_none() || left != right {
                    out.push(violation("B5", &[x], format!("f_{i}f_0 and f_0f_{i} disagree below v{x}")));
                }
            }
        }
        if i != 2 {
            if let (Some(a), Some(b)) = (g.e(x, ci), g.e(x, zero)) {
                if a != b {
                    let left = g.e(b, ci);
                    let right = g.e(a, zero);
                    if left.is_none() || left != right {
                        out.push(violation("B5", &[x], format!("e_{i}e_0 and e_0e_{i} disagree above v{x}")));
                    }
                }
            }
        }
    }
    out
}

/// The `{0,1}`-component with longest `1`-string of length `k`: strings
/// `v_0 → ⋯ → v_k` and `w_0 → ⋯ → w_{k−2}` with `0`-edges `v_j → w_j`
/// for `j ≤ k−2`, and a `0`-edge doubling `v_{k−1} → v_k`.
pub fn zero_one_template(k: usize) -> CrystalGraph {
    assert!(k >= 1);
    let mut g = CrystalGraph::new(2);
    let v: Vec<usize> = (0..=k).map(|j| g.add_vertex(format!("v{j}"), vec![])).collect();
    let w: Vec<usize> = (0..k.saturating_sub(1)).map(|j| g.add_vertex(format!("w{j}"), vec![])).collect();
    for j in 0..k {
        g.add_edge(v[j], Color::Even(1), v[j + 1]);
    }
    for j in 0..w.len().saturating_sub(1) {
        g.add_edge(w[j], Color::Even(1), w[j + 1]);
    }
    for (j, &wj) in w.iter().enumerate() {
        g.add_edge(v[j], Color::QUEER, wj);
    }
    g.add_edge(v[k - 1], Color::QUEER, v[k]);
    g
}

/// The `{0,2}` ladder: strings `A_0 … A_m` and `B_0 … B_{m+1}` with
/// `0`-edges `A_j → B_j` for `j ≤ m`.
pub fn zero_two_ladder(m: usize) -> CrystalGraph {
    let mut g = CrystalGraph::new(3);
    let a = add_string(&mut g, "A", m + 1, Color::Even(2));
    let b = add_string(&mut g, "B", m + 2, Color::Even(2));
    for j in 0..=m {
        g.add_edge(a[j], Color::QUEER, b[j]);
    }
    g
}

/// Two `{0,2}` ladders joined by the optional edge: strings `A` (length
/// `k−1`), `B` (length `k`), `C` (length `k−2`), `D` (length `k−1`), with
/// `0`-edges `A_j → B_j`, `C_j → D_j`, and `B_k → D_{k−1}`.
pub fn zero_two_joined(k: usize) -> CrystalGraph {
    assert!(k >= 1);
    let mut g = CrystalGraph::new(3);
    let a = add_string(&mut g, "A", k, Color::Even(2));
    let b = add_string(&mut g, "B", k + 1, Color::Even(2));
    let c = add_string(&mut g, "C", k - 1, Color::Even(2));
    let d = add_string(&mut g, "D", k, Color::Even(2));
    for j in 0..k {
        g.add_edge(a[j], Color::QUEER, b[j]);
    }
    for j in 0..k - 1 {
        g.add_edge(c[j], Color::QUEER, d[j]);
    }
    g.add_edge(b[k], Color::QUEER, d[k - 1]);
    g
}

fn add_string(g: &mut CrystalGraph, name: &str, vertices: usize, c: Color) -> Vec<usize> {
    let ids: Vec<usize> = (0..vertices).map(|j| g.add_vertex(format!("{name}{j}"), vec![])).collect();
    for p in ids.windows(2) {
        g.add_edge(p[0], c, p[1]);
    }
    ids
}

fn reversed(g: &CrystalGraph) -> CrystalGraph {
    let mut r = CrystalGraph::new(g.n());
    for v in g.vertices() {
        r.add_vertex(v.payload.clone(), v.weight.clone());
    }
    for e in g.edges() {
        r.add_edge(e.dst, e.color, e.src);
    }
    r
}

fn longest_string(g: &CrystalGraph, c: Color) -> usize {
    (0..g.len())
        .filter(|&v| g.e(v, c).is_none())
        .map(|v| string_lengths_graph(g, v, c).map(|p| p.0).unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Every `{0,1}`-component is a single vertex or one of the ladder shapes
/// [`zero_one_template`].
pub fn check_01_components(g: &CrystalGraph) -> Verdict {
    let sub = g.subgraph(&[Color::QUEER, Color::Even(1)]);
    let mut out = Vec::new();
    let mut notes = Vec::new();
    for set in sub.component_sets() {
        let comp = sub.induced(&set);
        if comp.edges().is_empty() {
            continue;
        }
        let k = longest_string(&comp, Color::Even(1));
        if k == 0 {
            out.push(violation("C01", &set, "component has 0-edges but no 1-edge".to_string()));
            continue;
        }
        let template = zero_one_template(k);
        if isomorphic(&template, &comp).unwrap_or(false) {
            notes.push(format!("{{0,1}}-component at v{}: k = {k}", set[0]));
        } else {
            out.push(violation(
                "C01",
                &set,
                format!("component of {} vertices with longest 1-string {k} is not the k = {k} shape", set.len()),
            ));
        }
    }
    Verdict::from_violations(out, notes)
}

/// Every `{0,2}`-component is a single vertex, a ladder
/// [`zero_two_ladder`], or two ladders joined by the optional `0`-edge
/// [`zero_two_joined`]. Notes record which shape occurred.
pub fn check_02_components(g: &CrystalGraph) -> Verdict {
    if g.n() < 3 {
        return Verdict::from_violations(
            Vec::new(),
            vec!["no color 2 in dimension below 3; nothing to check".to_string()],
        );
    }
    let sub = g.subgraph(&[Color::QUEER, Color::Even(2)]);
    let mut out = Vec::new();
    let mut notes = Vec::new();
    for set in sub.component_sets() {
        let comp = sub.induced(&set);
        if comp.edges().is_empty() {
            continue;
        }
        let size = set.len();
        let (template, label) = if size % 2 == 1 && size >= 3 {
            let m = (size - 3) / 2;
            (zero_two_ladder(m), format!("ladder m = {m} without the optional edge"))
        } else if size % 4 == 0 {
            let k = size / 4;
            (zero_two_joined(k), format!("joined k = {k} with the optional edge"))
        } else {
            out.push(violation("C02", &set, format!("component of {size} vertices matches no shape")));
            continue;
        };
        if isomorphic(&reversed(&template), &reversed(&comp)).unwrap_or(false) {
            notes.push(format!("{{0,2}}-component at v{}: {label}", set[0]));
        } else {
            out.push(violation("C02", &set, format!("component of {size} vertices is not the {label} shape")));
        }
    }
    Verdict::from_violations(out, notes)
}
