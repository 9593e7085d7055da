//! Incremental Schreier-Sims stabilizer chains.
//!
//! The chain stores, for each base point, the generators fixing all earlier
//! base points and a transversal of the orbit of the point under them. The
//! group order is the product of the transversal sizes, so it is exact
//! without ever enumerating elements. Base points are picked from a hint
//! list first (the automorphism search passes its first refinement path),
//! which keeps the chain levels aligned with the search tree.

use super::perm::Perm;
use num_bigint::BigUint;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    base: Vec<usize>,
    levels: Vec<Level>,
    hints: Vec<usize>,
    /// Every residue ever inserted; a convenient generating superset for
    /// orbit computations.
    residues: Vec<Perm>,
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// orbit point -> permutation mapping the base point to it
    transversal: HashMap<usize, Perm>,
    /// orbit in BFS discovery order
    orbit_order: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(point, Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            transversal,
            orbit_order: vec![point],
        }
    }
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            base: Vec::new(),
            levels: Vec::new(),
            hints: Vec::new(),
            residues: Vec::new(),
        }
    }

    /// Preferred base points, tried in order whenever the base extends.
    pub fn set_hints(&mut self, hints: Vec<usize>) {
        self.hints = hints;
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.transversal.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u8);
        for level in &self.levels {
            order *= BigUint::from(level.transversal.len());
        }
        order
    }

    /// All inserted residues (a generating set of the group).
    pub fn strong_generators(&self) -> &[Perm] {
        &self.residues
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.strip(p.clone(), 0).is_identity()
    }

    /// Adds a group generator. Returns whether the group grew.
    pub fn add_generator(&mut self, p: &Perm) -> bool {
        debug_assert_eq!(p.degree(), self.degree);
        let residue = self.strip(p.clone(), 0);
        if residue.is_identity() {
            return false;
        }
        self.insert_residue(residue, 0);
        true
    }

    /// Divides out transversal representatives level by level starting at
    /// `from`; the result is the identity iff `p` lies in the subgroup the
    /// suffix of the chain represents.
    fn strip(&self, p: Perm, from: usize) -> Perm {
        let mut residue = p;
        for level in &self.levels[from.min(self.levels.len())..] {
            let target = residue.apply(level.point);
            match level.transversal.get(&target) {
                Some(rep) => residue = residue.then(&rep.inverse()),
                None => return residue,
            }
        }
        residue
    }

    /// Number of leading base points the permutation fixes.
    fn leading_fixed(&self, p: &Perm) -> usize {
        self.base
            .iter()
            .take_while(|&&b| p.apply(b) == b)
            .count()
    }

    /// Installs a non-identity residue at every level from `floor` through
    /// the deepest level whose base prefix it fixes, then restores the
    /// chain invariant bottom-up.
    ///
    /// Residues produced while closing level k are products of level-k
    /// generators and deeper transversal representatives, so levels below
    /// `floor` already span them and are left untouched; that is what keeps
    /// the recursion well-founded.
    fn insert_residue(&mut self, residue: Perm, floor: usize) {
        let depth = self.leading_fixed(&residue);
        debug_assert!(depth >= floor);
        if depth == self.levels.len() {
            let point = self
                .hints
                .iter()
                .copied()
                .find(|&h| !self.base.contains(&h) && residue.apply(h) != h)
                .or_else(|| (0..self.degree).find(|&v| residue.apply(v) != v))
                .expect("non-identity residue moves some point");
            self.base.push(point);
            self.levels.push(Level::new(self.degree, point));
        }
        for level in &mut self.levels[floor..=depth] {
            level.gens.push(residue.clone());
        }
        self.residues.push(residue);
        for k in (floor..=depth).rev() {
            self.close_level(k);
        }
    }

    /// Re-establishes the Schreier condition at level k: every Schreier
    /// generator of the level's orbit must strip to the identity through
    /// the deeper levels.
    fn close_level(&mut self, k: usize) {
        'restart: loop {
            self.rebuild_transversal(k);
            let points = self.levels[k].orbit_order.clone();
            for p in points {
                let rep_p = self.levels[k].transversal[&p].clone();
                for gi in 0..self.levels[k].gens.len() {
                    let gen = self.levels[k].gens[gi].clone();
                    let q = gen.apply(p);
                    let rep_q = self.levels[k].transversal[&q].clone();
                    let schreier = rep_p.then(&gen).then(&rep_q.inverse());
                    debug_assert_eq!(schreier.apply(self.levels[k].point), self.levels[k].point);
                    let residue = self.strip(schreier, k + 1);
                    if !residue.is_identity() {
                        self.insert_residue(residue, k + 1);
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn rebuild_transversal(&mut self, k: usize) {
        let level = &mut self.levels[k];
        level.transversal.clear();
        level.orbit_order.clear();
        level
            .transversal
            .insert(level.point, Perm::identity(self.degree));
        level.orbit_order.push(level.point);
        let mut head = 0;
        while head < level.orbit_order.len() {
            let p = level.orbit_order[head];
            head += 1;
            let rep = level.transversal[&p].clone();
            for gen in &level.gens {
                let q = gen.apply(p);
                if let std::collections::hash_map::Entry::Vacant(slot) =
                    level.transversal.entry(q)
                {
                    slot.insert(rep.then(gen));
                    level.orbit_order.push(q);
                }
            }
        }
    }
}
