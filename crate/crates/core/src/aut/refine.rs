//! Ordered vertex partitions and equitable refinement (1-dimensional
//! Weisfeiler-Leman).
//!
//! A partition is a list of cells whose order is determined by the
//! refinement history, which makes every quantity recorded in a
//! [`Trace`] invariant under relabeling: two isomorphic configurations
//! refine along identical traces.

use crate::graph::Graph;

/// An ordered partition of the vertex set. Cells keep their vertices in
/// ascending order; the cell sequence is part of the structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

/// Label-invariant record of a refinement run: split events (splitter
/// position, split cell positions, fragment count/size pairs) followed by
/// the final cell sizes.
pub type Trace = Vec<u64>;

const EVENT_MARK: u64 = u64::MAX;
const END_MARK: u64 = u64::MAX - 1;

impl Partition {
    /// The single-cell partition of `0..n`.
    pub fn unit(n: usize) -> Self {
        if n == 0 {
            Partition { cells: Vec::new() }
        } else {
            Partition {
                cells: vec![(0..n).collect()],
            }
        }
    }

    pub fn from_cells(cells: Vec<Vec<usize>>) -> Self {
        let mut cells = cells;
        for cell in &mut cells {
            cell.sort_unstable();
        }
        Partition { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// When discrete: the map vertex -> cell position.
    pub fn labeling(&self) -> Option<Vec<usize>> {
        if !self.is_discrete() {
            return None;
        }
        let n = self.cells.len();
        let mut label = vec![0; n];
        for (pos, cell) in self.cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        Some(label)
    }

    /// Position of the first smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(pos, c)| (c.len(), *pos))
            .map(|(pos, _)| pos)
    }

    /// Splits `{v}` out of the cell at `cell_pos`, placing the singleton
    /// before the remainder.
    pub fn individualize(&self, cell_pos: usize, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (pos, cell) in self.cells.iter().enumerate() {
            if pos == cell_pos {
                debug_assert!(cell.contains(&v));
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        Partition { cells }
    }
}

/// Coarsest equitable refinement of `initial`: repeatedly find the first
/// cell (by position) whose neighbor counts split some cell, apply all the
/// splits it induces, and restart, until no cell splits any other.
pub fn refine(g: &Graph, initial: &Partition) -> (Partition, Trace) {
    let n = g.order();
    let mut cells = initial.cells.clone();
    let mut trace = Trace::new();
    let mut counts = vec![0usize; n];

    'stable: loop {
        for splitter_pos in 0..cells.len() {
            counts.fill(0);
            for &v in &cells[splitter_pos] {
                for &w in g.neighbors(v) {
                    counts[w] += 1;
                }
            }
            if apply_splits(&mut cells, &counts, splitter_pos, &mut trace) {
                continue 'stable;
            }
        }
        break;
    }

    trace.push(END_MARK);
    for cell in &cells {
        trace.push(cell.len() as u64);
    }
    (Partition { cells }, trace)
}

/// Splits every cell whose members have unequal `counts`, ordering the
/// fragments by count. Returns whether anything split.
fn apply_splits(
    cells: &mut Vec<Vec<usize>>,
    counts: &[usize],
    splitter_pos: usize,
    trace: &mut Trace,
) -> bool {
    let splits: Vec<usize> = cells
        .iter()
        .enumerate()
        .filter(|(_, cell)| {
            cell.len() > 1 && cell.iter().any(|&v| counts[v] != counts[cell[0]])
        })
        .map(|(pos, _)| pos)
        .collect();
    if splits.is_empty() {
        return false;
    }

    trace.push(EVENT_MARK);
    trace.push(splitter_pos as u64);
    let mut new_cells = Vec::with_capacity(cells.len() + splits.len());
    for (pos, cell) in cells.drain(..).enumerate() {
        if !splits.contains(&pos) {
            new_cells.push(cell);
            continue;
        }
        // Group by count, ascending; vertices stay ascending within groups.
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for v in cell {
            groups.entry(counts[v]).or_default().push(v);
        }
        trace.push(pos as u64);
        trace.push(groups.len() as u64);
        for (count, group) in groups {
            trace.push(count as u64);
            trace.push(group.len() as u64);
            new_cells.push(group);
        }
    }
    *cells = new_cells;
    true
}
