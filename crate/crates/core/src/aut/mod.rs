//! Independent graph-automorphism engine: equitable partition refinement,
//! individualization-refinement backtracking, Schreier-Sims stabilizer
//! chains for exact group orders, isomorphism testing and s-arc regularity
//! reports.
//!
//! Everything here works from the adjacency relation alone; it knows
//! nothing about honeycomb parameters, which is what makes it a usable
//! oracle for the classifier.

mod arcs;
mod chain;
mod perm;
mod refine;
mod search;

pub use arcs::{s_arc_report, SArcReport};
pub use perm::Perm;
pub use refine::{refine, Partition, Trace};
pub use search::{are_isomorphic, automorphisms, MAX_VERTICES};

use chain::StabChain;
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("graph has {order} vertices, engine is limited to {max}")]
    TooLarge { order: usize, max: usize },
    #[error("graph is not cubic")]
    NotCubic,
}

/// A permutation group on `0..degree`, given by generators plus a
/// stabilizer chain for exact order computations.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
}

impl PermGroup {
    pub(crate) fn new(degree: usize, generators: Vec<Perm>, chain: StabChain) -> Self {
        PermGroup {
            degree,
            generators,
            chain,
        }
    }

    /// The trivial group.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::new(degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> &[usize] {
        self.chain.base()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.transversal_sizes()
    }

    /// Exact group order (product of the chain's transversal sizes).
    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain.contains(p)
    }

    /// Orbit of a point under the generators, ascending.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut reached = vec![false; self.degree];
        reached[v] = true;
        let mut queue = vec![v];
        while let Some(p) = queue.pop() {
            for gen in &self.generators {
                let q = gen.apply(p);
                if !reached[q] {
                    reached[q] = true;
                    queue.push(q);
                }
            }
        }
        (0..self.degree).filter(|&u| reached[u]).collect()
    }

    /// `|G| / |orbit(v)|`, exact by orbit-stabilizer.
    pub fn point_stabilizer_order(&self, v: usize) -> BigUint {
        let orbit_len = BigUint::from(self.orbit(v).len());
        let order = self.order();
        debug_assert!((&order % &orbit_len) == BigUint::ZERO);
        order / orbit_len
    }

    /// Enumerates all elements, or `None` if there are more than `cap`.
    /// Only sensible for small groups; used by tests and lemma checks.
    pub fn elements_up_to(&self, cap: usize) -> Option<Vec<Perm>> {
        let mut seen = std::collections::HashSet::new();
        let identity = Perm::identity(self.degree);
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut out = Vec::new();
        while let Some(p) = queue.pop() {
            out.push(p.clone());
            for gen in &self.generators {
                let q = p.then(gen);
                if seen.len() > cap {
                    return None;
                }
                if seen.insert(q.clone()) {
                    queue.push(q);
                }
            }
        }
        if out.len() > cap {
            None
        } else {
            Some(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn orbit_stabilizer_consistency() {
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(6, &edges).unwrap();
        let group = automorphisms(&g).unwrap();
        for v in 0..6 {
            let orbit = group.orbit(v);
            assert_eq!(
                BigUint::from(orbit.len()) * group.point_stabilizer_order(v),
                group.order()
            );
        }
    }

    #[test]
    fn trivial_group_basics() {
        let group = PermGroup::trivial(4);
        assert_eq!(group.order(), BigUint::from(1u8));
        assert_eq!(group.orbit(2), vec![2]);
        assert_eq!(group.point_stabilizer_order(0), BigUint::from(1u8));
    }
}
