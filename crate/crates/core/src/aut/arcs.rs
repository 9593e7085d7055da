//! s-arc transitivity and regularity tests for cubic graphs.

use super::{AutError, PermGroup};
use crate::graph::Graph;
use num_bigint::BigUint;
use std::collections::HashSet;

/// How far up the s-arc hierarchy the automorphism group acts transitively,
/// and whether the action is regular somewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SArcReport {
    /// Largest s with a transitive action on s-arcs (0 = not arc-transitive).
    pub s_transitive_up_to: u32,
    /// The s at which the action is regular, if any.
    pub regular_at: Option<u32>,
    /// Order of a vertex stabilizer (at vertex 0).
    pub vertex_stabilizer_order: BigUint,
}

/// Number of s-arcs of a connected cubic graph on `order` vertices.
fn total_arcs(order: usize, s: u32) -> BigUint {
    BigUint::from(order) * BigUint::from(3u8) * BigUint::from(2u8).pow(s - 1)
}

/// Walks the s-arc hierarchy: for s = 1, 2, ... the orbit of one reference
/// s-arc under the group generators is compared against the total s-arc
/// count; regularity at s additionally needs the group order to equal that
/// count.
pub fn s_arc_report(g: &Graph, group: &PermGroup) -> Result<SArcReport, AutError> {
    if g.order() == 0 || (0..g.order()).any(|v| g.degree(v) != 3) {
        return Err(AutError::NotCubic);
    }
    let order = group.order();
    let vertex_stabilizer_order = group.point_stabilizer_order(0);

    let mut s_transitive_up_to = 0;
    let mut regular_at = None;
    let mut s = 1u32;
    // Orbits cannot exceed the group order, so transitivity is impossible
    // once the arc count passes it.
    while total_arcs(g.order(), s) <= order {
        let reference = reference_arc(g, s as usize);
        let orbit = arc_orbit(g, group, &reference);
        if BigUint::from(orbit) != total_arcs(g.order(), s) {
            break;
        }
        s_transitive_up_to = s;
        if order == total_arcs(g.order(), s) {
            regular_at = Some(s);
        }
        s += 1;
    }
    Ok(SArcReport {
        s_transitive_up_to,
        regular_at,
        vertex_stabilizer_order,
    })
}

/// A fixed s-arc: start at vertex 0 and extend greedily without immediate
/// backtracking, always taking the smallest admissible neighbor.
fn reference_arc(g: &Graph, s: usize) -> Vec<usize> {
    let mut arc = vec![0];
    for step in 0..s {
        let prev = if step == 0 { usize::MAX } else { arc[step - 1] };
        let next = g.neighbors(arc[step])
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cubic vertex has a non-backtracking continuation");
        arc.push(next);
    }
    arc
}

fn arc_orbit(g: &Graph, group: &PermGroup, arc: &[usize]) -> usize {
    let _ = g;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(arc.to_vec());
    let mut queue = vec![arc.to_vec()];
    while let Some(current) = queue.pop() {
        for gen in group.generators() {
            let image: Vec<usize> = current.iter().map(|&v| gen.apply(v)).collect();
            if !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push(image);
            }
        }
    }
    seen.len()
}
