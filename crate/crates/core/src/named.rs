//! Constructors for the named graphs appearing in the classification (the
//! five sporadic exceptional graphs, the generalized prisms, and the
//! wreath/prism/Moebius-ladder families), plus the parameter-level
//! recognizer for exceptional triples.
//!
//! The sporadic graphs are hard-coded adjacency data with one standard
//! model each, so tests against them are free of construction bugs.

use crate::construct::HtgParams;
use crate::graph::Graph;
use num_bigint::BigUint;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamedError {
    #[error("{kind} requires parameter >= {min} (got {got})")]
    BadParameter {
        kind: &'static str,
        min: u32,
        got: u32,
    },
}

/// The standard graphs used by the classification and its tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    K33,
    Cube,
    Heawood,
    Pappus,
    MoebiusKantor,
    /// GPr(n'): two 2n'-cycles joined by a perfect matching that shifts by
    /// one at even positions.
    GeneralizedPrism(u32),
    /// W(n) = Cay(Z2 x Zn; {(0,+-1), (1,+-1)}); 4-regular.
    Wreath(u32),
    /// Pr(n) = Cay(Z2 x Zn; {(1,0), (0,+-1)}).
    Prism(u32),
    /// Ml(n) = Cay(Z_2n; {+-1, n}).
    MoebiusLadder(u32),
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, NamedError> {
        match *self {
            NamedGraph::K33 => {
                let edges: Vec<(usize, usize)> =
                    (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
                Ok(Graph::from_edges(6, &edges).unwrap())
            }
            NamedGraph::Cube => {
                // Q3 on 3-bit strings, edges between Hamming distance 1.
                let edges: Vec<(usize, usize)> = (0..8usize)
                    .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                    .filter(|&(u, v)| u < v)
                    .collect();
                Ok(Graph::from_edges(8, &edges).unwrap())
            }
            NamedGraph::Heawood => {
                // Bipartite (3,6)-cage: C14 plus the chords of LCF [5,-5]^7.
                let mut edges: Vec<(usize, usize)> =
                    (0..14).map(|i| (i, (i + 1) % 14)).collect();
                edges.extend([(0, 5), (1, 10), (2, 7), (3, 12), (4, 9), (6, 11), (8, 13)]);
                Ok(Graph::from_edges(14, &edges).unwrap())
            }
            NamedGraph::Pappus => {
                // Levi graph of the Pappus configuration: C18 plus the
                // chords of LCF [5,7,-7,7,-7,-5]^3.
                let mut edges: Vec<(usize, usize)> =
                    (0..18).map(|i| (i, (i + 1) % 18)).collect();
                edges.extend([
                    (0, 5),
                    (1, 8),
                    (2, 13),
                    (3, 10),
                    (4, 15),
                    (6, 11),
                    (7, 14),
                    (9, 16),
                    (12, 17),
                ]);
                Ok(Graph::from_edges(18, &edges).unwrap())
            }
            NamedGraph::MoebiusKantor => {
                // Generalized Petersen graph GP(8, 3).
                let mut edges: Vec<(usize, usize)> = Vec::new();
                for i in 0..8usize {
                    edges.push((i, (i + 1) % 8));
                    edges.push((i, 8 + i));
                    edges.push((8 + i, 8 + (i + 3) % 8));
                }
                Ok(Graph::from_edges(16, &edges).unwrap())
            }
            NamedGraph::GeneralizedPrism(half) => {
                if half < 2 {
                    return Err(NamedError::BadParameter {
                        kind: "GPr",
                        min: 2,
                        got: half,
                    });
                }
                let ring = 2 * half as usize;
                let idx = |i: usize, j: usize| i * ring + j % ring;
                let mut edges = Vec::new();
                for i in 0..2 {
                    for j in 0..ring {
                        edges.push((idx(i, j), idx(i, j + 1)));
                    }
                }
                for j in (0..ring).step_by(2) {
                    edges.push((idx(0, j), idx(1, j + 1)));
                    edges.push((idx(1, j), idx(0, j + 1)));
                }
                Ok(Graph::from_edges(2 * ring, &edges).unwrap())
            }
            NamedGraph::Wreath(n) => {
                if n < 3 {
                    return Err(NamedError::BadParameter {
                        kind: "W",
                        min: 3,
                        got: n,
                    });
                }
                let n = n as usize;
                let idx = |i: usize, j: usize| i * n + j % n;
                let mut edges = Vec::new();
                for i in 0..2 {
                    for j in 0..n {
                        edges.push((idx(i, j), idx(i, j + 1)));
                        edges.push((idx(i, j), idx(1 - i, j + 1)));
                    }
                }
                Ok(Graph::from_edges(2 * n, &edges).unwrap())
            }
            NamedGraph::Prism(n) => {
                if n < 3 {
                    return Err(NamedError::BadParameter {
                        kind: "Pr",
                        min: 3,
                        got: n,
                    });
                }
                let n = n as usize;
                let idx = |i: usize, j: usize| i * n + j % n;
                let mut edges = Vec::new();
                for j in 0..n {
                    edges.push((idx(0, j), idx(0, j + 1)));
                    edges.push((idx(1, j), idx(1, j + 1)));
                    edges.push((idx(0, j), idx(1, j)));
                }
                Ok(Graph::from_edges(2 * n, &edges).unwrap())
            }
            NamedGraph::MoebiusLadder(n) => {
                if n < 3 {
                    return Err(NamedError::BadParameter {
                        kind: "Ml",
                        min: 3,
                        got: n,
                    });
                }
                let n = n as usize;
                let mut edges: Vec<(usize, usize)> =
                    (0..2 * n).map(|i| (i, (i + 1) % (2 * n))).collect();
                edges.extend((0..n).map(|i| (i, i + n)));
                Ok(Graph::from_edges(2 * n, &edges).unwrap())
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::K33 => write!(f, "K3,3"),
            NamedGraph::Cube => write!(f, "cube"),
            NamedGraph::Heawood => write!(f, "Heawood"),
            NamedGraph::Pappus => write!(f, "Pappus"),
            NamedGraph::MoebiusKantor => write!(f, "Moebius-Kantor"),
            NamedGraph::GeneralizedPrism(h) => write!(f, "GPr({h})"),
            NamedGraph::Wreath(n) => write!(f, "W({n})"),
            NamedGraph::Prism(n) => write!(f, "Pr({n})"),
            NamedGraph::MoebiusLadder(n) => write!(f, "Ml({n})"),
        }
    }
}

/// Which exceptional graph a triple yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalKind {
    K33,
    Cube,
    Heawood,
    MoebiusKantor,
    Pappus,
    GeneralizedPrism(u32),
}

impl ExceptionalKind {
    pub fn graph(&self) -> NamedGraph {
        match *self {
            ExceptionalKind::K33 => NamedGraph::K33,
            ExceptionalKind::Cube => NamedGraph::Cube,
            ExceptionalKind::Heawood => NamedGraph::Heawood,
            ExceptionalKind::MoebiusKantor => NamedGraph::MoebiusKantor,
            ExceptionalKind::Pappus => NamedGraph::Pappus,
            ExceptionalKind::GeneralizedPrism(h) => NamedGraph::GeneralizedPrism(h),
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            ExceptionalKind::K33 => 6,
            ExceptionalKind::Cube => 8,
            ExceptionalKind::Heawood => 14,
            ExceptionalKind::MoebiusKantor => 16,
            ExceptionalKind::Pappus => 18,
            ExceptionalKind::GeneralizedPrism(h) => 4 * h,
        }
    }
}

impl fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.graph().fmt(f)
    }
}

/// An exceptional graph together with its known automorphism data: the
/// sporadic graphs are s-arc-regular for the listed s, the generalized
/// prisms are not arc-transitive and have vertex stabilizers of order
/// `2^(n'-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalId {
    pub kind: ExceptionalKind,
    pub s_arc_regular: Option<u32>,
    pub stabilizer_order: BigUint,
}

impl ExceptionalId {
    pub fn from_kind(kind: ExceptionalKind) -> Self {
        let s_arc_regular = match kind {
            ExceptionalKind::K33 | ExceptionalKind::Pappus => Some(3),
            ExceptionalKind::Cube | ExceptionalKind::MoebiusKantor => Some(2),
            ExceptionalKind::Heawood => Some(4),
            ExceptionalKind::GeneralizedPrism(_) => None,
        };
        let stabilizer_order = match kind {
            // s-arc-regular cubic: stabilizer of order 3 * 2^(s-1)
            ExceptionalKind::K33 | ExceptionalKind::Pappus => BigUint::from(12u8),
            ExceptionalKind::Cube | ExceptionalKind::MoebiusKantor => BigUint::from(6u8),
            ExceptionalKind::Heawood => BigUint::from(24u8),
            ExceptionalKind::GeneralizedPrism(h) => BigUint::from(2u8).pow(h - 1),
        };
        ExceptionalId {
            kind,
            s_arc_regular,
            stabilizer_order,
        }
    }

    /// Full automorphism group order: graph order times vertex stabilizer.
    pub fn aut_order(&self) -> BigUint {
        BigUint::from(self.kind.order()) * &self.stabilizer_order
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0} is not in normal form")]
pub struct NotNormalForm(pub HtgParams);

/// Matches a normal-form triple against the exceptional list: the five
/// sporadic graphs and the three generalized-prism parameter families
/// (n = 4, or (m, l) = (1, 2n'-1), or (m, l) = (2, 2), with mn = 4n' and
/// n' > 2).
pub fn recognize_exceptional(p: &HtgParams) -> Result<Option<ExceptionalId>, NotNormalForm> {
    if !p.is_normal_form() {
        return Err(NotNormalForm(*p));
    }
    let kind = match (p.m(), p.n(), p.ell()) {
        (1, 6, 3) => Some(ExceptionalKind::K33),
        (2, 4, 0) | (2, 4, 2) | (1, 8, 3) => Some(ExceptionalKind::Cube),
        (1, 14, 5) => Some(ExceptionalKind::Heawood),
        (1, 16, 5) | (2, 8, 4) => Some(ExceptionalKind::MoebiusKantor),
        (3, 6, 3) => Some(ExceptionalKind::Pappus),
        (m, n, ell) => {
            let mn = m * n;
            if mn % 4 == 0 && mn / 4 > 2 {
                let half = mn / 4;
                let prism = n == 4
                    || (m == 1 && ell == 2 * half - 1)
                    || (m == 2 && ell == 2);
                prism.then_some(ExceptionalKind::GeneralizedPrism(half))
            } else {
                None
            }
        }
    };
    Ok(kind.map(ExceptionalId::from_kind))
}
