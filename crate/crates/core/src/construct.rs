//! Honeycomb toroidal graphs HTG(m, n, l): parameter validation, the
//! combinatorial construction, the vertex-to-group-element correspondence,
//! edge coloring, normal form and the parameter-only girth formula.
//!
//! The graph lives on `Z_m x Z_n` (m vertical n-cycles). Vertex `<i, j>` is
//! stored at index `i * n + j`. Horizontal edges join consecutive rows at
//! columns of opposite parity to the row; the last row wraps to the first
//! with a column shift of `l`.

use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("n must be even (got {0})")]
    NOdd(u32),
    #[error("n must be at least 4 (got {0})")]
    NTooSmall(u32),
    #[error("m must be at least 1")]
    MZero,
    #[error("l must satisfy 0 <= l <= n-1 (got l = {ell}, n = {n})")]
    EllRange { ell: u32, n: u32 },
    #[error("l must have the same parity as m (got l = {ell}, m = {m})")]
    ParityMismatch { ell: u32, m: u32 },
    #[error("HTG({m}, {n}, {ell}) degenerates to a multigraph")]
    DegenerateMultigraph { m: u32, n: u32, ell: u32 },
}

/// A validated parameter triple (m, n, l).
///
/// `l` is kept exactly as given; reduction to normal form (`l <= n/2`) is an
/// explicit step via [`normal_form`](Self::normal_form).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HtgParams {
    m: u32,
    n: u32,
    ell: u32,
}

impl HtgParams {
    pub fn new(m: u32, n: u32, ell: u32) -> Result<Self, ParamError> {
        if !n.is_multiple_of(2) {
            return Err(ParamError::NOdd(n));
        }
        if n < 4 {
            return Err(ParamError::NTooSmall(n));
        }
        if m == 0 {
            return Err(ParamError::MZero);
        }
        if ell > n - 1 {
            return Err(ParamError::EllRange { ell, n });
        }
        if ell % 2 != m % 2 {
            return Err(ParamError::ParityMismatch { ell, m });
        }
        // With a single column of cycles, a shift of +-1 would duplicate
        // cycle edges.
        if m == 1 && (ell == 1 || ell == n - 1) {
            return Err(ParamError::DegenerateMultigraph { m, n, ell });
        }
        Ok(HtgParams { m, n, ell })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Number of vertices, `m * n`.
    pub fn order(&self) -> u32 {
        self.m * self.n
    }

    pub fn is_normal_form(&self) -> bool {
        self.ell <= self.n / 2
    }

    /// The isomorphic representative with `l <= n/2`, using
    /// `HTG(m, n, l) = HTG(m, n, n-l)`.
    pub fn normal_form(&self) -> HtgParams {
        HtgParams {
            m: self.m,
            n: self.n,
            ell: self.ell.min(self.n - self.ell),
        }
    }

    /// Builds the graph with its edge coloring and vertex-element table,
    /// and cross-checks the combinatorial edge set against the Cayley graph
    /// of the associated generalized dihedral group.
    pub fn build(&self) -> ColoredHtg {
        let n = self.n as usize;
        let order = self.order() as usize;
        let mut edges = Vec::with_capacity(order * 3 / 2);
        let mut colors = Vec::with_capacity(order * 3 / 2);
        for ((u, v), color) in construction_edges(self.m as usize, n, self.ell as usize) {
            edges.push((u, v));
            colors.push(color);
        }
        let graph = Graph::from_edges(order, &edges)
            .expect("validated parameters yield a simple graph");
        let combinatorial = ColoredHtg::from_parts(graph, *self, &edges, &colors);

        let cayley = GroupSpec::new(*self).cayley_colored_graph();
        assert_eq!(
            combinatorial.color_map, cayley.color_map,
            "combinatorial construction disagrees with the Cayley graph for {self}"
        );
        combinatorial
    }

    /// Girth from the parameters alone: 4 in exactly five arithmetic cases,
    /// 6 otherwise. Requires normal form.
    pub fn girth_by_parameters(&self) -> u32 {
        assert!(self.is_normal_form(), "girth formula requires normal form");
        let (m, n, ell) = (self.m, self.n, self.ell);
        let girth4 = n == 4
            || (m == 1 && n >= 6 && ell == 3)
            || (m == 1 && n >= 6 && n % 4 == 2 && ell == n / 2)
            || (m == 1 && n >= 8 && n % 4 == 0 && ell == (n - 2) / 2)
            || (m == 2 && n >= 6 && (ell == 0 || ell == 2));
        if girth4 {
            4
        } else {
            6
        }
    }

    /// Common cycle lengths of the three two-color subgraphs
    /// (red-blue, red-green, blue-green): twice the orders of x, y and
    /// x^-1 y respectively.
    pub fn color_cycle_lengths(&self) -> (u64, u64, u64) {
        let (m, n, ell) = (self.m as u64, self.n as u64, self.ell as u64);
        let mn = m * n;
        let diff = (ell as i64 - m as i64).unsigned_abs();
        (
            n,
            2 * mn / gcd(n, ell + m),
            2 * mn / gcd(n, diff % n),
        )
    }
}

impl fmt::Display for HtgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HTG({}, {}, {})", self.m, self.n, self.ell)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Edge list of the raw combinatorial construction, with each edge's color.
///
/// Vertical edges alternate red and blue (red when column and row have equal
/// parity); horizontal and wrap edges are green.
fn construction_edges(
    m: usize,
    n: usize,
    ell: usize,
) -> Vec<((usize, usize), EdgeColor)> {
    let idx = |i: usize, j: usize| i * n + j % n;
    let mut out = Vec::with_capacity(m * n * 3 / 2);
    for i in 0..m {
        for j in 0..n {
            let color = if (i + j) % 2 == 0 {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            };
            out.push(((idx(i, j), idx(i, j + 1)), color));
        }
    }
    for i in 0..m.saturating_sub(1) {
        for j in 0..n {
            if i % 2 != j % 2 {
                out.push(((idx(i, j), idx(i + 1, j)), EdgeColor::Green));
            }
        }
    }
    for j in 0..n {
        if j % 2 == m % 2 {
            out.push(((idx(m - 1, j), idx(0, j + ell)), EdgeColor::Green));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    Red,
    Blue,
    Green,
}

impl EdgeColor {
    pub const ALL: [EdgeColor; 3] = [EdgeColor::Red, EdgeColor::Blue, EdgeColor::Green];

    pub fn name(&self) -> &'static str {
        match self {
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
            EdgeColor::Green => "green",
        }
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A honeycomb toroidal graph together with its edge 3-coloring and the
/// bijection between vertices and group elements.
#[derive(Debug, Clone)]
pub struct ColoredHtg {
    graph: Graph,
    params: HtgParams,
    color_map: BTreeMap<(usize, usize), EdgeColor>,
    /// Per vertex, the unique neighbor along each color (indexed red, blue,
    /// green).
    neighbor_by_color: Vec<[usize; 3]>,
    elements: Vec<GroupElement>,
}

impl ColoredHtg {
    /// Assembles a colored graph from parallel edge and color lists,
    /// checking that every vertex meets exactly one edge of each color.
    pub(crate) fn from_parts(
        graph: Graph,
        params: HtgParams,
        edges: &[(usize, usize)],
        colors: &[EdgeColor],
    ) -> Self {
        assert_eq!(edges.len(), colors.len());
        let order = graph.order();
        let mut color_map = BTreeMap::new();
        let mut neighbor_by_color = vec![[usize::MAX; 3]; order];
        for (&(u, v), &color) in edges.iter().zip(colors) {
            let key = (u.min(v), u.max(v));
            let previous = color_map.insert(key, color);
            assert!(previous.is_none(), "edge {key:?} colored twice");
            for (a, b) in [(u, v), (v, u)] {
                let slot = &mut neighbor_by_color[a][color.index()];
                assert_eq!(
                    *slot,
                    usize::MAX,
                    "vertex {a} has two {color} edges"
                );
                *slot = b;
            }
        }
        assert!(
            neighbor_by_color
                .iter()
                .all(|slots| slots.iter().all(|&w| w != usize::MAX)),
            "some vertex misses a color"
        );
        let elements = GroupSpec::new(params).elements();
        ColoredHtg {
            graph,
            params,
            color_map,
            neighbor_by_color,
            elements,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn params(&self) -> HtgParams {
        self.params
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<EdgeColor> {
        self.color_map.get(&(u.min(v), u.max(v))).copied()
    }

    /// The group element sitting at a vertex.
    pub fn element_of(&self, v: usize) -> GroupElement {
        self.elements[v]
    }

    /// The vertex carrying a group element.
    pub fn vertex_of(&self, g: GroupElement) -> usize {
        GroupSpec::new(self.params).vertex_of(g)
    }

    /// The unique neighbor reached from `v` along an edge of `color`.
    pub fn step(&self, v: usize, color: EdgeColor) -> usize {
        self.neighbor_by_color[v][color.index()]
    }

    pub fn edges_of_color(&self, color: EdgeColor) -> Vec<(usize, usize)> {
        self.color_map
            .iter()
            .filter(|(_, &c)| c == color)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Cycle lengths of the subgraph on two of the three color classes. The
    /// subgraph is 2-regular, so it decomposes into cycles.
    pub fn two_color_cycle_lengths(&self, a: EdgeColor, b: EdgeColor) -> Vec<usize> {
        assert_ne!(a, b);
        let order = self.graph.order();
        let mut seen = vec![false; order];
        let mut lengths = Vec::new();
        for start in 0..order {
            if seen[start] {
                continue;
            }
            // Alternate colors; both alternations trace the same cycle.
            let mut len = 0;
            let mut v = start;
            let mut color = a;
            loop {
                seen[v] = true;
                v = self.step(v, color);
                color = if color == a { b } else { a };
                len += 1;
                if v == start && color == a {
                    break;
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// DOT output with the edge colors as attributes.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("graph htg {\n");
        for (&(u, v), color) in &self.color_map {
            let _ = writeln!(out, "  {u} -- {v} [color={color}];");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphError;

    #[test]
    fn validation_accepts_and_rejects_per_the_rules() {
        assert!(HtgParams::new(3, 6, 3).is_ok());
        assert_eq!(
            HtgParams::new(1, 6, 2),
            Err(ParamError::ParityMismatch { ell: 2, m: 1 })
        );
        assert_eq!(
            HtgParams::new(1, 6, 1),
            Err(ParamError::DegenerateMultigraph { m: 1, n: 6, ell: 1 })
        );
        assert_eq!(HtgParams::new(1, 5, 1), Err(ParamError::NOdd(5)));
        assert_eq!(HtgParams::new(2, 2, 0), Err(ParamError::NTooSmall(2)));
        assert_eq!(
            HtgParams::new(2, 6, 6),
            Err(ParamError::EllRange { ell: 6, n: 6 })
        );
        assert_eq!(HtgParams::new(0, 6, 0), Err(ParamError::MZero));
    }

    #[test]
    fn degenerate_triple_really_is_a_multigraph() {
        // The raw construction for (1, 6, 1) duplicates cycle edges; this is
        // what validation protects against.
        let raw: Vec<(usize, usize)> = construction_edges(1, 6, 1)
            .into_iter()
            .map(|(e, _)| e)
            .collect();
        assert!(matches!(
            Graph::from_edges(6, &raw),
            Err(GraphError::DuplicateEdge(..))
        ));
    }

    #[test]
    fn normal_form_reduces_large_shifts() {
        let p = HtgParams::new(2, 8, 6).unwrap();
        assert_eq!(p.normal_form(), HtgParams::new(2, 8, 2).unwrap());
        let q = HtgParams::new(1, 14, 5).unwrap();
        assert_eq!(q.normal_form(), q);
        let r = HtgParams::new(3, 6, 3).unwrap();
        assert_eq!(r.normal_form(), r);
    }

    #[test]
    fn build_1_6_3_is_k33_shaped() {
        let colored = HtgParams::new(1, 6, 3).unwrap().build();
        assert_eq!(colored.graph().order(), 6);
        assert_eq!(colored.graph().size(), 9);
        assert_eq!(colored.graph().girth(), Some(4));
        let profile = colored.graph().structural_profile();
        assert!(profile.is_cubic && profile.is_connected && profile.is_bipartite);
    }

    #[test]
    fn build_3_6_3_counts() {
        let colored = HtgParams::new(3, 6, 3).unwrap().build();
        assert_eq!(colored.graph().order(), 18);
        assert_eq!(colored.graph().size(), 27);
        let profile = colored.graph().structural_profile();
        assert!(profile.is_cubic && profile.is_bipartite);
    }

    #[test]
    fn handshake_on_a_spread_of_triples() {
        for (m, n, ell) in [(1u32, 10u32, 5u32), (2, 8, 0), (4, 6, 2), (5, 4, 1)] {
            let p = HtgParams::new(m, n, ell).unwrap();
            let colored = p.build();
            assert_eq!(colored.graph().order() as u32, p.order());
            assert_eq!(colored.graph().size() as u32, 3 * p.order() / 2);
        }
    }

    #[test]
    fn girth_formula_examples() {
        assert_eq!(HtgParams::new(1, 6, 3).unwrap().girth_by_parameters(), 4);
        assert_eq!(HtgParams::new(1, 16, 7).unwrap().girth_by_parameters(), 4);
        assert_eq!(HtgParams::new(1, 26, 7).unwrap().girth_by_parameters(), 6);
        assert_eq!(HtgParams::new(2, 8, 0).unwrap().girth_by_parameters(), 4);
        assert_eq!(HtgParams::new(3, 6, 3).unwrap().girth_by_parameters(), 6);
    }

    #[test]
    fn color_cycle_length_examples() {
        assert_eq!(
            HtgParams::new(3, 6, 3).unwrap().color_cycle_lengths(),
            (6, 6, 6)
        );
        assert_eq!(
            HtgParams::new(1, 14, 5).unwrap().color_cycle_lengths(),
            (14, 14, 14)
        );
        // red-blue is always a single length: n.
        for (m, n, ell) in [(2u32, 10u32, 4u32), (4, 8, 0), (1, 20, 9)] {
            let p = HtgParams::new(m, n, ell).unwrap();
            assert_eq!(p.color_cycle_lengths().0, n as u64);
        }
    }

    #[test]
    fn two_color_subgraphs_match_the_formulas() {
        for (m, n, ell) in [(3u32, 6u32, 3u32), (1, 14, 5), (2, 8, 4), (4, 6, 0)] {
            let p = HtgParams::new(m, n, ell).unwrap();
            let colored = p.build();
            let (rb, rg, bg) = p.color_cycle_lengths();
            let check = |a, b, expected: u64| {
                let lengths = colored.two_color_cycle_lengths(a, b);
                assert!(
                    lengths.iter().all(|&len| len as u64 == expected),
                    "{p}: {a}-{b} cycles {lengths:?}, expected {expected}"
                );
                assert_eq!(
                    lengths.len() as u64 * expected,
                    p.order() as u64,
                    "{p}: {a}-{b} cycles must partition the vertices"
                );
            };
            check(EdgeColor::Red, EdgeColor::Blue, rb);
            check(EdgeColor::Red, EdgeColor::Green, rg);
            check(EdgeColor::Blue, EdgeColor::Green, bg);
        }
    }

    #[test]
    fn generic_hexagons_close_after_exactly_six_steps() {
        for (m, n, ell) in [(3u32, 6u32, 3u32), (1, 10, 3), (2, 12, 6)] {
            let colored = HtgParams::new(m, n, ell).unwrap().build();
            for start in 0..colored.graph().order() {
                let mut v = start;
                let pattern = [
                    EdgeColor::Red,
                    EdgeColor::Blue,
                    EdgeColor::Green,
                    EdgeColor::Red,
                    EdgeColor::Blue,
                    EdgeColor::Green,
                ];
                for (steps, color) in pattern.iter().enumerate() {
                    assert!(v != start || steps == 0, "walk closed early");
                    v = colored.step(v, *color);
                }
                assert_eq!(v, start);
            }
        }
    }

    #[test]
    fn element_table_round_trips() {
        let colored = HtgParams::new(2, 8, 4).unwrap().build();
        for v in 0..colored.graph().order() {
            assert_eq!(colored.vertex_of(colored.element_of(v)), v);
        }
    }
}
