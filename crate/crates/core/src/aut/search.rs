//! Backtracking search for graph automorphisms and isomorphisms over
//! refinement-stabilized branching.
//!
//! The automorphism search is the usual individualization-refinement tree:
//! descend to a first leaf, then explore sibling branches; every other leaf
//! whose labeled graph matches the first leaf's yields an automorphism.
//! Three prunings keep the tree small, and all three are label-invariant:
//!
//! * branches whose refinement trace differs from the first path's trace at
//!   that depth cannot lead to a matching leaf;
//! * a branch vertex lying in the orbit of an already-explored sibling
//!   (under the found generators fixing the current path pointwise) yields
//!   only known automorphisms;
//! * once a leaf produces an automorphism, the search jumps back to the
//!   deepest tree level shared with the first path.

use super::chain::StabChain;
use super::perm::Perm;
use super::refine::{refine, Partition, Trace};
use super::{AutError, PermGroup};
use crate::graph::Graph;

/// Desk-scale guard for the search.
pub const MAX_VERTICES: usize = 500;

pub(super) fn is_automorphism(g: &Graph, p: &Perm) -> bool {
    p.degree() == g.order() && g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// Computes a generating set and stabilizer chain for the automorphism
/// group of `g`.
pub fn automorphisms(g: &Graph) -> Result<PermGroup, AutError> {
    if g.order() > MAX_VERTICES {
        return Err(AutError::TooLarge {
            order: g.order(),
            max: MAX_VERTICES,
        });
    }
    let (root, _) = refine(g, &Partition::unit(g.order()));
    let mut search = AutSearch {
        graph: g,
        path: Vec::new(),
        first_path: Vec::new(),
        first_traces: Vec::new(),
        first_leaf_inv: Vec::new(),
        first_leaf_seen: false,
        chain: StabChain::new(g.order()),
        generators: Vec::new(),
    };
    search.dfs(&root, 0);
    for gen in &search.generators {
        assert!(
            is_automorphism(g, gen),
            "search produced a non-automorphism"
        );
    }
    Ok(PermGroup::new(g.order(), search.generators, search.chain))
}

enum Flow {
    Continue,
    Backjump(usize),
}

struct AutSearch<'g> {
    graph: &'g Graph,
    /// Vertices individualized along the current path.
    path: Vec<usize>,
    first_path: Vec<usize>,
    /// Trace of the child refinement at each first-path depth.
    first_traces: Vec<Trace>,
    /// First leaf labeling, inverted: position -> vertex.
    first_leaf_inv: Vec<usize>,
    first_leaf_seen: bool,
    chain: StabChain,
    generators: Vec<Perm>,
}

impl AutSearch<'_> {
    fn dfs(&mut self, part: &Partition, depth: usize) -> Flow {
        if let Some(labeling) = part.labeling() {
            return self.handle_leaf(&labeling);
        }
        let cell_pos = part.target_cell().expect("non-discrete partition");
        let candidates = part.cells()[cell_pos].clone();
        let mut explored: Vec<usize> = Vec::new();
        for w in candidates {
            if !explored.is_empty() && self.reaches_explored(&explored, w) {
                continue;
            }
            let (child, trace) = refine(self.graph, &part.individualize(cell_pos, w));
            if !self.first_leaf_seen {
                self.first_traces.push(trace);
                self.first_path.push(w);
            } else if self.first_traces.get(depth) != Some(&trace) {
                explored.push(w);
                continue;
            }
            self.path.push(w);
            let flow = self.dfs(&child, depth + 1);
            self.path.pop();
            explored.push(w);
            if let Flow::Backjump(level) = flow {
                if level < depth {
                    return flow;
                }
            }
        }
        Flow::Continue
    }

    fn handle_leaf(&mut self, labeling: &[usize]) -> Flow {
        if !self.first_leaf_seen {
            self.first_leaf_seen = true;
            self.first_leaf_inv = vec![0; labeling.len()];
            for (v, &pos) in labeling.iter().enumerate() {
                self.first_leaf_inv[pos] = v;
            }
            self.chain.set_hints(self.first_path.clone());
            return Flow::Continue;
        }
        // The candidate maps this leaf's labeling onto the first leaf's.
        let images: Vec<usize> = labeling.iter().map(|&pos| self.first_leaf_inv[pos]).collect();
        let gamma = Perm::from_images(images).expect("two labelings compose to a bijection");
        if gamma.is_identity() || !is_automorphism(self.graph, &gamma) {
            return Flow::Continue;
        }
        if self.chain.add_generator(&gamma) {
            self.generators.push(gamma);
        }
        let common = self
            .path
            .iter()
            .zip(&self.first_path)
            .take_while(|(a, b)| a == b)
            .count();
        Flow::Backjump(common)
    }

    /// Whether `w` is reachable from an explored sibling under the found
    /// generators that fix the current path pointwise.
    fn reaches_explored(&self, explored: &[usize], w: usize) -> bool {
        let fixing: Vec<&Perm> = self
            .chain
            .strong_generators()
            .iter()
            .filter(|p| p.fixes_all(&self.path))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut reached = vec![false; self.graph.order()];
        let mut queue: Vec<usize> = explored.to_vec();
        for &v in explored {
            reached[v] = true;
        }
        while let Some(v) = queue.pop() {
            for gen in &fixing {
                let u = gen.apply(v);
                if u == w {
                    return true;
                }
                if !reached[u] {
                    reached[u] = true;
                    queue.push(u);
                }
            }
        }
        false
    }
}

/// Whether two graphs are isomorphic, by refinement-guided backtracking
/// mapping `g1` into `g2`.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, AutError> {
    for g in [g1, g2] {
        if g.order() > MAX_VERTICES {
            return Err(AutError::TooLarge {
                order: g.order(),
                max: MAX_VERTICES,
            });
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let mut degrees1: Vec<usize> = (0..g1.order()).map(|v| g1.degree(v)).collect();
    let mut degrees2: Vec<usize> = (0..g2.order()).map(|v| g2.degree(v)).collect();
    degrees1.sort_unstable();
    degrees2.sort_unstable();
    if degrees1 != degrees2 || g1.girth() != g2.girth() {
        return Ok(false);
    }
    let (p1, t1) = refine(g1, &Partition::unit(g1.order()));
    let (p2, t2) = refine(g2, &Partition::unit(g2.order()));
    if t1 != t2 {
        return Ok(false);
    }
    Ok(iso_dfs(g1, g2, &p1, &p2))
}

fn iso_dfs(g1: &Graph, g2: &Graph, p1: &Partition, p2: &Partition) -> bool {
    debug_assert_eq!(
        p1.cells().iter().map(Vec::len).collect::<Vec<_>>(),
        p2.cells().iter().map(Vec::len).collect::<Vec<_>>()
    );
    if p1.is_discrete() {
        let map_to_g2: Vec<usize> = {
            let label1 = p1.labeling().expect("discrete");
            let mut inv2 = vec![0; g2.order()];
            for (v, &pos) in p2.labeling().expect("discrete").iter().enumerate() {
                inv2[pos] = v;
            }
            label1.into_iter().map(|pos| inv2[pos]).collect()
        };
        return g1
            .edges()
            .all(|(u, v)| g2.has_edge(map_to_g2[u], map_to_g2[v]));
    }
    let cell_pos = p1.target_cell().expect("non-discrete partition");
    // Individualize a fixed vertex on the g1 side and try every candidate
    // on the g2 side.
    let w = p1.cells()[cell_pos][0];
    let (c1, t1) = refine(g1, &p1.individualize(cell_pos, w));
    for &u in &p2.cells()[cell_pos] {
        let (c2, t2) = refine(g2, &p2.individualize(cell_pos, u));
        if t1 == t2 && iso_dfs(g1, g2, &c1, &c2) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn k33() -> Graph {
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        Graph::from_edges(6, &edges).unwrap()
    }

    /// Independent oracle: count adjacency-preserving permutations by
    /// backtracking over partial assignments.
    fn brute_force_aut_count(g: &Graph) -> u64 {
        fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
            let v = image.len();
            if v == g.order() {
                return 1;
            }
            let mut total = 0;
            for cand in 0..g.order() {
                if used[cand] || g.degree(cand) != g.degree(v) {
                    continue;
                }
                let consistent = (0..v).all(|u| {
                    g.has_edge(u, v) == g.has_edge(image[u], cand)
                });
                if consistent {
                    used[cand] = true;
                    image.push(cand);
                    total += extend(g, image, used);
                    image.pop();
                    used[cand] = false;
                }
            }
            total
        }
        extend(g, &mut Vec::new(), &mut vec![false; g.order()])
    }

    #[test]
    fn cycles_have_dihedral_groups() {
        for n in [3usize, 5, 6, 8, 11] {
            let group = automorphisms(&cycle(n)).unwrap();
            assert_eq!(group.order(), BigUint::from(2 * n), "C{n}");
        }
    }

    #[test]
    fn k33_has_order_72() {
        let group = automorphisms(&k33()).unwrap();
        assert_eq!(group.order(), BigUint::from(72u8));
        assert_eq!(brute_force_aut_count(&k33()), 72);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let cases: Vec<Graph> = vec![
            Graph::from_edges(1, &[]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            cycle(4),
            cycle(7),
            k33(),
            // cube
            Graph::from_edges(
                8,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 4),
                    (0, 4),
                    (1, 5),
                    (2, 6),
                    (3, 7),
                ],
            )
            .unwrap(),
            // triangle with a pendant
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
            // two disjoint triangles: wreath-style group of order 72
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
            // Petersen graph
            Graph::from_edges(
                10,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 0),
                    (5, 7),
                    (7, 9),
                    (9, 6),
                    (6, 8),
                    (8, 5),
                    (0, 5),
                    (1, 6),
                    (2, 7),
                    (3, 8),
                    (4, 9),
                ],
            )
            .unwrap(),
        ];
        for g in &cases {
            let group = automorphisms(g).unwrap();
            assert_eq!(
                group.order(),
                BigUint::from(brute_force_aut_count(g)),
                "graph on {} vertices with {} edges",
                g.order(),
                g.size()
            );
        }
    }

    #[test]
    fn group_elements_match_chain_order_when_small() {
        let group = automorphisms(&cycle(6)).unwrap();
        let elements = group.elements_up_to(10_000).unwrap();
        assert_eq!(BigUint::from(elements.len()), group.order());
    }

    #[test]
    fn isomorphism_detects_relabelings() {
        let g = k33();
        let h = g.permuted(&[4, 2, 5, 0, 3, 1]);
        assert!(are_isomorphic(&g, &h).unwrap());
        assert!(!are_isomorphic(&g, &cycle(6)).unwrap());
        // same order and size, different girth
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!are_isomorphic(&g, &prism).unwrap());
    }

    #[test]
    fn size_guard_errors() {
        let big = Graph::from_edges(501, &[]).unwrap();
        assert!(matches!(
            automorphisms(&big),
            Err(AutError::TooLarge { .. })
        ));
    }
}
