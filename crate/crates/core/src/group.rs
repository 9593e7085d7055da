//! Exact arithmetic in the generalized dihedral group
//!
//! ```text
//! G = < t, x, y | t^2, x^(n/2), y^m = x^((l+m)/2), txt = x^-1, tyt = y^-1, xy = yx >
//! ```
//!
//! and construction of the Cayley colored graph with respect to the three
//! reflections `{t, tx, ty}`. Every element has the canonical form
//! `x^j y^i t^eps` with `0 <= j < n/2`, `0 <= i < m`, `eps` a bit; the
//! relation `y^m = x^carry` turns y-exponent overflow into an x-exponent
//! carry, which is the only non-componentwise part of the arithmetic.

use crate::construct::{ColoredHtg, EdgeColor, HtgParams};
use crate::graph::Graph;

/// Presentation data for the group of a given parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    m: u64,
    half_n: u64,
    carry: u64,
    params: HtgParams,
}

/// A group element in canonical form `x^j y^i t^eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    /// Exponent of x, reduced mod n/2.
    pub x_exp: u64,
    /// Exponent of y, reduced mod m.
    pub y_exp: u64,
    /// Whether the inverting reflection t is present.
    pub flip: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        x_exp: 0,
        y_exp: 0,
        flip: false,
    };

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl GroupSpec {
    /// Derives the group presentation from a validated parameter triple.
    pub fn new(params: HtgParams) -> Self {
        let (m, n, ell) = (params.m() as u64, params.n() as u64, params.ell() as u64);
        let half_n = n / 2;
        GroupSpec {
            m,
            half_n,
            carry: ((ell + m) / 2) % half_n,
            params,
        }
    }

    pub fn params(&self) -> HtgParams {
        self.params
    }

    /// Order of the whole group, `m * n`.
    pub fn order(&self) -> u64 {
        self.m * 2 * self.half_n
    }

    /// The x-exponent contributed by `y^m` (from the relation
    /// `y^m = x^((l+m)/2)`).
    pub fn carry(&self) -> u64 {
        self.carry
    }

    pub fn generator_x(&self) -> GroupElement {
        self.canonical(1, 0, false)
    }

    pub fn generator_y(&self) -> GroupElement {
        self.canonical(0, 1, false)
    }

    pub fn generator_t(&self) -> GroupElement {
        GroupElement {
            x_exp: 0,
            y_exp: 0,
            flip: true,
        }
    }

    /// The connection-set reflections `t`, `tx`, `ty` in canonical form.
    pub fn reflections(&self) -> [GroupElement; 3] {
        let t = self.generator_t();
        [
            t,
            self.multiply(t, self.generator_x()),
            self.multiply(t, self.generator_y()),
        ]
    }

    /// Reduces raw exponents to canonical form, folding y-overflow into the
    /// x-exponent via the carry relation.
    fn canonical(&self, x_exp: i64, y_exp: i64, flip: bool) -> GroupElement {
        let m = self.m as i64;
        let y_red = y_exp.rem_euclid(m);
        let wraps = (y_exp - y_red) / m;
        let x_red = (x_exp + wraps * self.carry as i64).rem_euclid(self.half_n as i64);
        GroupElement {
            x_exp: x_red as u64,
            y_exp: y_red as u64,
            flip,
        }
    }

    /// Canonical product. When the left factor contains t, the right
    /// factor's abelian part is inverted before the exponents combine.
    pub fn multiply(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let sign: i64 = if a.flip { -1 } else { 1 };
        self.canonical(
            a.x_exp as i64 + sign * b.x_exp as i64,
            a.y_exp as i64 + sign * b.y_exp as i64,
            a.flip ^ b.flip,
        )
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        if a.flip {
            // Reflections are involutions.
            a
        } else {
            self.canonical(-(a.x_exp as i64), -(a.y_exp as i64), false)
        }
    }

    /// Least k >= 1 with `a^k = 1`, by repeated multiplication.
    pub fn element_order(&self, a: GroupElement) -> u64 {
        let mut power = a;
        let mut k = 1;
        while !power.is_identity() {
            power = self.multiply(power, a);
            k += 1;
            debug_assert!(k <= self.order());
        }
        k
    }

    /// All `m * n` elements, enumerated in vertex order (see
    /// [`vertex_of`](Self::vertex_of)).
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut table = vec![GroupElement::IDENTITY; self.order() as usize];
        for x_exp in 0..self.half_n {
            for y_exp in 0..self.m {
                for flip in [false, true] {
                    let g = GroupElement {
                        x_exp,
                        y_exp,
                        flip,
                    };
                    table[self.vertex_of(g)] = g;
                }
            }
        }
        table
    }

    /// The vertex index of an element under the row-major `<i, j>` layout of
    /// the combinatorial construction: `x^j y^i t^eps` sits at row `i`,
    /// column `i + 2j + eps (mod n)`.
    pub fn vertex_of(&self, g: GroupElement) -> usize {
        let n = 2 * self.half_n;
        let column = (g.y_exp + 2 * g.x_exp + u64::from(g.flip)) % n;
        (g.y_exp * n + column) as usize
    }

    /// The left-translation action of `g` on the vertex indexing: the
    /// vertex of `h` maps to the vertex of `g * h`. Left translations are
    /// automorphisms of the Cayley graph, and for triples whose full group
    /// is regular they are all of it.
    pub fn left_translation(&self, g: GroupElement) -> Vec<usize> {
        let mut images = vec![0; self.order() as usize];
        for h in self.elements() {
            images[self.vertex_of(h)] = self.vertex_of(self.multiply(g, h));
        }
        images
    }

    /// The Cayley colored graph `Cay(G; {t, tx, ty})`, with edges through t
    /// red, through tx blue and through ty green, on the same vertex
    /// indexing as the combinatorial construction.
    pub fn cayley_colored_graph(&self) -> ColoredHtg {
        let order = self.order() as usize;
        let [t, tx, ty] = self.reflections();
        let mut edges = Vec::with_capacity(order * 3 / 2);
        let mut colors = Vec::with_capacity(order * 3 / 2);
        for g in self.elements() {
            let u = self.vertex_of(g);
            for (s, color) in [
                (t, EdgeColor::Red),
                (tx, EdgeColor::Blue),
                (ty, EdgeColor::Green),
            ] {
                let v = self.vertex_of(self.multiply(g, s));
                if u < v {
                    edges.push((u, v));
                    colors.push(color);
                }
            }
        }
        let graph = Graph::from_edges(order, &edges)
            .expect("validated parameters yield a simple Cayley graph");
        ColoredHtg::from_parts(graph, self.params, &edges, &colors)
    }
}
