//! Materialized crystal graphs: construction by closure under operators,
//! components, highest weights, characters, rooted isomorphism, and JSON /
//! DOT serialization.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::SparsePolynomial;
use crate::queer::{e0_shifted, f0_shifted};
use crate::shifted::{e_shifted, f_shifted};
use crate::tableau::{enumerate_ssht, enumerate_ssyt, Partition, ShiftedTableau, StrictPartition, YoungTableau};
use crate::young::{e_young, f_young};

/// Default cap on the number of vertices a closure may create.
pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("closure exceeded the budget of {limit} vertices")]
    ClosureBudgetExceeded { limit: usize },
    #[error("graph has {count} source vertices; a rooted graph needs exactly one")]
    MultipleSources { count: usize },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the {color}-string through vertex {vertex} leaves the graph")]
    StringTruncated { vertex: usize, color: Color },
    #[error("a {color}-colored cycle passes through vertex {vertex}")]
    CycleDetected { vertex: usize, color: Color },
    #[error("vertex {vertex} has a negative weight entry")]
    NegativeWeight { vertex: usize },
}

/// An edge color: `Even(i)` is the ordinary operator `f_i` (with `Even(0)`
/// the queer operator `f_0`); `Odd(i)` is the odd operator `f_{i'}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Color {
    Even(u32),
    Odd(u32),
}

impl Color {
    /// The queer color `0`.
    pub const QUEER: Color = Color::Even(0);

    pub fn index(self) -> u32 {
        match self {
            Color::Even(i) | Color::Odd(i) => i,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Even(i) => write!(f, "{i}"),
            Color::Odd(i) => write!(f, "{i}p"),
        }
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (digits, odd) = match s.strip_suffix('p').or_else(|| s.strip_suffix('\'')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let i: u32 = digits.parse().map_err(|_| format!("invalid color {s:?}"))?;
        if odd {
            if i == 0 {
                return Err("odd colors start at 1p".to_string());
            }
            Ok(Color::Odd(i))
        } else {
            Ok(Color::Even(i))
        }
    }
}

/// A vertex: its canonical text payload and its weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub payload: String,
    pub weight: Vec<i64>,
}

/// A colored edge `src --color--> dst`, meaning `f_color(src) = dst`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub src: usize,
    pub color: Color,
    pub dst: usize,
}

/// An edge-colored directed graph with a weight on every vertex.
///
/// Vertices are addressed by index. Multiple edges of one color at a vertex
/// are representable so that verifiers can detect them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalGraph {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(Color, usize)>>,
    in_adj: Vec<Vec<(Color, usize)>>,
}

impl CrystalGraph {
    /// An empty graph of dimension `n`.
    pub fn new(n: usize) -> Self {
        CrystalGraph { n, vertices: Vec::new(), edges: Vec::new(), out_adj: Vec::new(), in_adj: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn add_vertex(&mut self, payload: impl Into<String>, weight: Vec<i64>) -> usize {
        self.vertices.push(Vertex { payload: payload.into(), weight });
        self.out_adj.push(Vec::new());
        self.in_adj.push(Vec::new());
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, src: usize, color: Color, dst: usize) {
        self.edges.push(Edge { src, color, dst });
        self.out_adj[src].push((color, dst));
        self.in_adj[dst].push((color, src));
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn payload(&self, v: usize) -> &str {
        &self.vertices[v].payload
    }

    pub fn weight(&self, v: usize) -> &[i64] {
        &self.vertices[v].weight
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> &[(Color, usize)] {
        &self.out_adj[v]
    }

    pub fn in_edges(&self, v: usize) -> &[(Color, usize)] {
        &self.in_adj[v]
    }

    /// `f_c(v)`: the target of the first `c`-edge leaving `v`.
    pub fn f(&self, v: usize, c: Color) -> Option<usize> {
        self.out_adj[v].iter().find(|(k, _)| *k == c).map(|&(_, w)| w)
    }

    /// `e_c(v)`: the source of the first `c`-edge entering `v`.
    pub fn e(&self, v: usize, c: Color) -> Option<usize> {
        self.in_adj[v].iter().find(|(k, _)| *k == c).map(|&(_, w)| w)
    }

    /// Index of the vertex with the given payload.
    pub fn find(&self, payload: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.payload == payload)
    }

    /// A payload → index map, for repeated lookups.
    pub fn index_map(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(k, v)| (v.payload.as_str(), k)).collect()
    }

    /// The set of colors carried by edges.
    pub fn colors(&self) -> BTreeSet<Color> {
        self.edges.iter().map(|e| e.color).collect()
    }

    /// Number of edges of each color.
    pub fn edge_counts(&self) -> Vec<(Color, usize)> {
        let mut counts: std::collections::BTreeMap<Color, usize> = Default::default();
        for e in &self.edges {
            *counts.entry(e.color).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Same vertices, keeping only edges whose color is listed.
    pub fn subgraph(&self, colors: &[Color]) -> CrystalGraph {
        self.filter_edges(|e| colors.contains(&e.color))
    }

    /// Same vertices, keeping only edges accepted by `keep`.
    pub fn filter_edges(&self, keep: impl Fn(&Edge) -> bool) -> CrystalGraph {
        let mut g = CrystalGraph::new(self.n);
        for v in &self.vertices {
            g.add_vertex(v.payload.clone(), v.weight.clone());
        }
        for e in self.edges.iter().filter(|e| keep(e)) {
            g.add_edge(e.src, e.color, e.dst);
        }
        g
    }

    /// A copy with edge number `k` removed.
    pub fn without_edge(&self, k: usize) -> CrystalGraph {
        let removed: *const Edge = &self.edges[k];
        self.filter_edges(|e| !std::ptr::eq(e, removed))
    }

    /// A copy with the weight of vertex `v` replaced.
    pub fn with_weight(&self, v: usize, weight: Vec<i64>) -> CrystalGraph {
        let mut g = self.clone();
        g.vertices[v].weight = weight;
        g
    }

    /// The subgraph induced on the listed vertices, in that order.
    pub fn induced(&self, verts: &[usize]) -> CrystalGraph {
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut g = CrystalGraph::new(self.n);
        for &v in verts {
            g.add_vertex(self.vertices[v].payload.clone(), self.vertices[v].weight.clone());
        }
        for e in &self.edges {
            if let (Some(&s), Some(&d)) = (pos.get(&e.src), pos.get(&e.dst)) {
                g.add_edge(s, e.color, d);
            }
        }
        g
    }

    /// Vertex sets of the weakly connected components, each sorted, ordered
    /// by smallest member.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for &(_, w) in self.out_adj[v].iter().chain(self.in_adj[v].iter()) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Vertices with no incoming edge of any listed color.
    pub fn highest_weights(&self, colors: &[Color]) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_adj[v].iter().all(|(c, _)| !colors.contains(c))).collect()
    }

    /// Vertices with no incoming edge at all.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.in_adj[v].is_empty()).collect()
    }
}

/// Weakly connected components as standalone graphs.
pub fn components(c: &CrystalGraph) -> Vec<CrystalGraph> {
    c.component_sets().iter().map(|s| c.induced(s)).collect()
}

/// Vertices with no incoming edge of any listed color.
pub fn highest_weights(c: &CrystalGraph, colors: &[Color]) -> Vec<usize> {
    c.highest_weights(colors)
}

/// The non-queer even colors `1, …, n−1`.
pub fn type_a_colors(n: usize) -> Vec<Color> {
    (1..n as u32).map(Color::Even).collect()
}

/// `Σ_v x^{wt(v)}`.
pub fn character(c: &CrystalGraph) -> Result<SparsePolynomial, GraphError> {
    let mut p = SparsePolynomial::zero(c.n());
    for (k, v) in c.vertices().iter().enumerate() {
        let mut exps = Vec::with_capacity(c.n());
        for &w in &v.weight {
            if w < 0 {
                return Err(GraphError::NegativeWeight { vertex: k });
            }
            exps.push(w as u32);
        }
        exps.resize(c.n(), 0);
        p.add_term(exps, 1);
    }
    Ok(p)
}

/// The unique source of a graph, or `MultipleSources`.
fn unique_source(c: &CrystalGraph) -> Result<usize, GraphError> {
    let s = c.sources();
    if s.len() == 1 {
        Ok(s[0])
    } else {
        Err(GraphError::MultipleSources { count: s.len() })
    }
}

/// A colored-digraph isomorphism `C1 → C2` as a vertex map, found by a
/// synchronized breadth-first search from the unique sources.
pub fn isomorphism(c1: &CrystalGraph, c2: &CrystalGraph) -> Result<Option<Vec<usize>>, GraphError> {
    let r1 = unique_source(c1)?;
    let r2 = unique_source(c2)?;
    if c1.len() != c2.len() || c1.edges().len() != c2.edges().len() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; c1.len()];
    let mut back = vec![usize::MAX; c2.len()];
    map[r1] = r2;
    back[r2] = r1;
    let mut queue = VecDeque::from([r1]);
    while let Some(u) = queue.pop_front() {
        let v = map[u];
        for (adj1, adj2) in [(c1.out_edges(u), c2.out_edges(v)), (c1.in_edges(u), c2.in_edges(v))] {
            let mut a: Vec<(Color, usize)> = adj1.to_vec();
            let mut b: Vec<(Color, usize)> = adj2.to_vec();
            a.sort_by_key(|x| x.0);
            b.sort_by_key(|x| x.0);
            if a.len() != b.len() {
                return Ok(None);
            }
            for (&(ca, wa), &(cb, wb)) in a.iter().zip(b.iter()) {
                if ca != cb {
                    return Ok(None);
                }
                match (map[wa], back[wb]) {
                    (usize::MAX, usize::MAX) => {
                        map[wa] = wb;
                        back[wb] = wa;
                        queue.push_back(wa);
                    }
                    (m, _) if m == wb => {}
                    _ => return Ok(None),
                }
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Ok(None);
    }
    let mut e1: Vec<(usize, Color, usize)> = c1.edges().iter().map(|e| (map[e.src], e.color, map[e.dst])).collect();
    let mut e2: Vec<(usize, Color, usize)> = c2.edges().iter().map(|e| (e.src, e.color, e.dst)).collect();
    e1.sort_unstable();
    e2.sort_unstable();
    Ok(if e1 == e2 { Some(map) } else { None })
}

/// Whether two rooted graphs are isomorphic as colored digraphs.
pub fn isomorphic(c1: &CrystalGraph, c2: &CrystalGraph) -> Result<bool, GraphError> {
    Ok(isomorphism(c1, c2)?.is_some())
}

/// A family of crystal operators on a concrete element type.
pub trait CrystalModel: Sync {
    type Elem: Clone + Eq + Hash + Send + Sync;

    /// Dimension: weights have `n` entries.
    fn n(&self) -> usize;
    /// The colors whose operators this model provides.
    fn colors(&self) -> Vec<Color>;
    fn lower(&self, x: &Self::Elem, c: Color) -> Option<Self::Elem>;
    fn raise(&self, x: &Self::Elem, c: Color) -> Option<Self::Elem>;
    fn weight(&self, x: &Self::Elem) -> Vec<i64>;
    /// Canonical text form, used as the vertex identity.
    fn payload(&self, x: &Self::Elem) -> String;
}

/// Type-A operators on semistandard Young tableaux with entries ≤ n.
pub struct YoungModel {
    pub n: usize,
}

impl CrystalModel for YoungModel {
    type Elem = YoungTableau;

    fn n(&self) -> usize {
        self.n
    }
    fn colors(&self) -> Vec<Color> {
        type_a_colors(self.n)
    }
    fn lower(&self, x: &YoungTableau, c: Color) -> Option<YoungTableau> {
        match c {
            Color::Even(i) if i >= 1 => f_young(x, i),
            _ => None,
        }
    }
    fn raise(&self, x: &YoungTableau, c: Color) -> Option<YoungTableau> {
        match c {
            Color::Even(i) if i >= 1 => e_young(x, i),
            _ => None,
        }
    }
    fn weight(&self, x: &YoungTableau) -> Vec<i64> {
        x.weight(self.n).expect("entries bounded by n")
    }
    fn payload(&self, x: &YoungTableau) -> String {
        x.to_string()
    }
}

/// Shifted-tableau operators, optionally with the queer operator `f_0`.
pub struct ShiftedModel {
    pub n: usize,
    pub queer: bool,
}

impl CrystalModel for ShiftedModel {
    type Elem = ShiftedTableau;

    fn n(&self) -> usize {
        self.n
    }
    fn colors(&self) -> Vec<Color> {
        let mut c = Vec::new();
        if self.queer && self.n >= 2 {
            c.push(Color::QUEER);
        }
        c.extend(type_a_colors(self.n));
        c
    }
    fn lower(&self, x: &ShiftedTableau, c: Color) -> Option<ShiftedTableau> {
        match c {
            Color::Even(0) if self.queer && self.n >= 2 => f0_shifted(x),
            Color::Even(i) if i >= 1 => f_shifted(x, i).map(|p| p.0),
            _ => None,
        }
    }
    fn raise(&self, x: &ShiftedTableau, c: Color) -> Option<ShiftedTableau> {
        match c {
            Color::Even(0) if self.queer && self.n >= 2 => e0_shifted(x),
            Color::Even(i) if i >= 1 => e_shifted(x, i).map(|p| p.0),
            _ => None,
        }
    }
    fn weight(&self, x: &ShiftedTableau) -> Vec<i64> {
        x.weight(self.n).expect("entries bounded by n")
    }
    fn payload(&self, x: &ShiftedTableau) -> String {
        x.to_string()
    }
}

/// The standard crystal `1 → 2 → ⋯ → n`, optionally with `f_0(1) = 2`.
pub struct StandardModel {
    pub n: usize,
    pub queer: bool,
}

impl CrystalModel for StandardModel {
    type Elem = u32;

    fn n(&self) -> usize {
        self.n
    }
    fn colors(&self) -> Vec<Color> {
        ShiftedModel { n: self.n, queer: self.queer }.colors()
    }
    fn lower(&self, &x: &u32, c: Color) -> Option<u32> {
        match c {
            Color::Even(0) if self.queer && x == 1 && self.n >= 2 => Some(2),
            Color::Even(i) if i >= 1 && x == i && (i as usize) < self.n => Some(i + 1),
            _ => None,
        }
    }
    fn raise(&self, &x: &u32, c: Color) -> Option<u32> {
        match c {
            Color::Even(0) if self.queer && x == 2 => Some(1),
            Color::Even(i) if i >= 1 && x == i + 1 && (i as usize) < self.n => Some(i),
            _ => None,
        }
    }
    fn weight(&self, &x: &u32) -> Vec<i64> {
        let mut w = vec![0; self.n];
        w[x as usize - 1] = 1;
        w
    }
    fn payload(&self, x: &u32) -> String {
        x.to_string()
    }
}

/// The closure of `seeds` under every lowering and raising operator of the
/// model. Vertices are sorted by payload, so the result does not depend on
/// seed order or thread schedule. Edges come from the lowering operators.
pub fn build_graph<M: CrystalModel>(
    model: &M,
    seeds: impl IntoIterator<Item = M::Elem>,
    max_vertices: usize,
) -> Result<CrystalGraph, GraphError> {
    let colors = model.colors();
    let mut seen: HashSet<M::Elem> = HashSet::new();
    let mut frontier: Vec<M::Elem> = Vec::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            frontier.push(s);
        }
    }
    if seen.len() > max_vertices {
        return Err(GraphError::ClosureBudgetExceeded { limit: max_vertices });
    }
    while !frontier.is_empty() {
        let found: Vec<M::Elem> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                colors.iter().flat_map(|&c| [model.lower(x, c), model.raise(x, c)]).flatten().collect::<Vec<_>>()
            })
            .collect();
        frontier.clear();
        for y in found {
            if !seen.contains(&y) {
                seen.insert(y.clone());
                frontier.push(y);
                if seen.len() > max_vertices {
                    return Err(GraphError::ClosureBudgetExceeded { limit: max_vertices });
                }
            }
        }
    }
    let mut elems: Vec<(String, M::Elem)> = seen.into_iter().map(|x| (model.payload(&x), x)).collect();
    elems.par_sort_by(|a, b| a.0.cmp(&b.0));
    let index: HashMap<&str, usize> = elems.iter().enumerate().map(|(k, (p, _))| (p.as_str(), k)).collect();
    let edges: Vec<Vec<Edge>> = elems
        .par_iter()
        .enumerate()
        .map(|(k, (_, x))| {
            colors
                .iter()
                .filter_map(|&c| {
                    let y = model.lower(x, c)?;
                    let dst = index[model.payload(&y).as_str()];
                    Some(Edge { src: k, color: c, dst })
                })
                .collect()
        })
        .collect();
    let mut g = CrystalGraph::new(model.n());
    for (p, x) in &elems {
        g.add_vertex(p.clone(), model.weight(x));
    }
    for e in edges.into_iter().flatten() {
        g.add_edge(e.src, e.color, e.dst);
    }
    Ok(g)
}

/// The type-A crystal on `SSYT_n(λ)`.
pub fn young_crystal(shape: &Partition, n: usize, max_vertices: usize) -> Result<CrystalGraph, GraphError> {
    build_graph(&YoungModel { n }, enumerate_ssyt(shape, n), max_vertices)
}

/// The crystal on `SSHT_n(γ)`; with `queer`, including `0`-edges.
pub fn shifted_crystal(
    shape: &StrictPartition,
    n: usize,
    queer: bool,
    max_vertices: usize,
) -> Result<CrystalGraph, GraphError> {
    build_graph(&ShiftedModel { n, queer }, enumerate_ssht(shape, n), max_vertices)
}

/// The standard crystal of dimension `n`; with `queer`, including `f_0(1) = 2`.
pub fn standard_crystal(n: usize, queer: bool) -> CrystalGraph {
    build_graph(&StandardModel { n, queer }, 1..=n as u32, usize::MAX).expect("unbounded budget")
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: String,
    payload: String,
    weight: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    src: String,
    color: String,
    dst: String,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

/// JSON serialization; vertex ids are `v0`, `v1`, … in index order.
pub fn to_json(c: &CrystalGraph) -> String {
    let doc = JsonGraph {
        n: c.n(),
        vertices: c
            .vertices()
            .iter()
            .enumerate()
            .map(|(k, v)| JsonVertex { id: format!("v{k}"), payload: v.payload.clone(), weight: v.weight.clone() })
            .collect(),
        edges: c
            .edges()
            .iter()
            .map(|e| JsonEdge { src: format!("v{}", e.src), color: e.color.to_string(), dst: format!("v{}", e.dst) })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// Parses the JSON form. Ids may be arbitrary distinct strings.
pub fn from_json(text: &str) -> Result<CrystalGraph, GraphError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let semantic = |msg: String| GraphError::Parse { line: 0, column: 0, msg };
    let mut g = CrystalGraph::new(doc.n);
    let mut ids: HashMap<String, usize> = HashMap::new();
    for v in doc.vertices {
        if v.weight.len() != doc.n {
            return Err(semantic(format!(
                "vertex {} has weight of length {}, expected {}",
                v.id,
                v.weight.len(),
                doc.n
            )));
        }
        let k = g.add_vertex(v.payload, v.weight);
        if ids.insert(v.id.clone(), k).is_some() {
            return Err(semantic(format!("duplicate vertex id {}", v.id)));
        }
    }
    for e in doc.edges {
        let look =
            |id: &str| ids.get(id).copied().ok_or_else(|| semantic(format!("edge refers to unknown vertex {id}")));
        let color: Color = e.color.parse().map_err(semantic)?;
        g.add_edge(look(&e.src)?, color, look(&e.dst)?);
    }
    Ok(g)
}

fn dot_color(c: Color) -> &'static str {
    match c.index() {
        0 => "green",
        1 => "red",
        2 => "blue",
        3 => "purple",
        4 => "orange",
        5 => "brown",
        _ => "gray",
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz form: vertices labelled by payload and weight, edges colored by
/// label (0 green, 1 red, 2 blue, 3 purple); odd colors are dashed.
pub fn to_dot(c: &CrystalGraph) -> String {
    let mut s = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, v) in c.vertices().iter().enumerate() {
        let w: Vec<String> = v.weight.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("  v{k} [label=\"{}\\n({})\"];\n", dot_escape(&v.payload), w.join(",")));
    }
    for e in c.edges() {
        let style = if matches!(e.color, Color::Odd(_)) { ", style=dashed" } else { "" };
        s.push_str(&format!(
            "  v{} -> v{} [label=\"{}\", color={}, fontcolor={}{}];\n",
            e.src,
            e.dst,
            e.color,
            dot_color(e.color),
            dot_color(e.color),
            style
        ));
    }
    s.push_str("}\n");
    s
}
