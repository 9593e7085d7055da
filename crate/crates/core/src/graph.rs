//! Simple undirected graphs with the structural queries the rest of the
//! crate needs: girth, degree/connectivity/bipartiteness scans and
//! fixed-length cycle counts through an edge.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
}

/// An immutable simple undirected graph on vertices `0..order`, stored as
/// sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Degree/connectivity/bipartiteness summary of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralProfile {
    pub is_cubic: bool,
    pub is_connected: bool,
    pub is_bipartite: bool,
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// duplicate edges and out-of-range endpoints.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::IndexOutOfRange {
                        vertex: w,
                        order,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj };
        debug_assert!(g.adjacency_is_symmetric());
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn adjacency_is_symmetric(&self) -> bool {
        (0..self.order()).all(|u| self.adj[u].iter().all(|&v| self.adj[v].contains(&u)))
    }

    /// Relabels the graph by `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            adj[perm[u]] = nbrs.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge scanned at distance d closes a
    /// cycle of length at most `dist[u] + dist[v] + 1`, and running the scan
    /// from every start vertex makes the minimum exact.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                // Once u is at least half the best cycle length away, no
                // shorter cycle through `start` can still appear.
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn structural_profile(&self) -> StructuralProfile {
        let n = self.order();
        let is_cubic = n > 0 && self.adj.iter().all(|nbrs| nbrs.len() == 3);

        // Connectivity from vertex 0; bipartiteness over every component.
        let mut color = vec![u8::MAX; n];
        let mut is_bipartite = true;
        let mut reached_from_zero = 0usize;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                if start == 0 {
                    reached_from_zero += 1;
                }
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        is_bipartite = false;
                    }
                }
            }
        }
        let is_connected = n == 0 || reached_from_zero == n;
        StructuralProfile {
            is_cubic,
            is_connected,
            is_bipartite,
        }
    }

    /// Number of distinct (unoriented) cycles of exactly `length` edges that
    /// contain the edge `{u, v}`.
    ///
    /// Cycles through `{u, v}` correspond one-to-one with simple `v`-`u`
    /// paths of `length - 1` edges that avoid the edge itself, so counting
    /// those paths counts each unoriented cycle exactly once.
    ///
    /// `length` must be at most 12; cycle counts are only used at desk scale.
    pub fn cycles_through_edge(
        &self,
        u: usize,
        v: usize,
        length: usize,
    ) -> Result<usize, GraphError> {
        assert!(length <= 12, "cycle length guard exceeded");
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        if length < 3 {
            return Ok(0);
        }
        let mut visited = vec![false; self.order()];
        visited[v] = true;
        Ok(self.count_paths(v, u, length - 1, &mut visited))
    }

    fn count_paths(
        &self,
        current: usize,
        target: usize,
        remaining: usize,
        visited: &mut [bool],
    ) -> usize {
        if remaining == 1 {
            // The direct edge {v, u} itself is excluded: it only arises for
            // length 2, which is rejected before recursing.
            return usize::from(self.has_edge(current, target));
        }
        let mut total = 0;
        for &w in &self.adj[current] {
            if w == target || visited[w] {
                continue;
            }
            visited[w] = true;
            total += self.count_paths(w, target, remaining - 1, visited);
            visited[w] = false;
        }
        total
    }
}
