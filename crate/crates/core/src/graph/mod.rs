//! Finite simple graphs on vertices `0..n` (printed 1-based as `x1..xn`).

mod cycles;
pub mod enumerate;
mod family;
mod io;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

pub use cycles::EXHAUSTIVE_VERTEX_LIMIT;
pub use family::Family;
pub use io::GraphFile;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} has an endpoint outside 1..={n}",
                    a + 1,
                    b + 1
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{{}, {}}}",
                    a.min(b) + 1,
                    a.max(b) + 1
                )));
            }
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            adj,
            name: None,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph is valid")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Human readable identifier: the name if set, otherwise the edge list.
    pub fn id(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => {
                let edges: Vec<String> = self
                    .edges
                    .iter()
                    .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect();
                format!("G(n={};{})", self.n, edges.join(","))
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// A proper 2-coloring if one exists (BFS per component, color 0 at each root).
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("queued vertices are colored");
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(0)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Union of the neighborhoods of the vertices in `set`. Members of `set`
    /// adjacent to other members are included.
    pub fn neighbors_of_set(&self, set: &[usize]) -> BTreeSet<usize> {
        set.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .collect()
    }

    /// Subgraph induced on `set`, with vertices relabeled `0..|set|` in
    /// ascending order of their original index.
    pub fn induced_subgraph(&self, set: &[usize]) -> Graph {
        let verts: Vec<usize> = set.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let index = |v: usize| verts.binary_search(&v).ok();
        let edges = self.edges.iter().filter_map(|&(a, b)| Some((index(a)?, index(b)?)));
        Graph::new(verts.len(), edges).expect("induced subgraph of a valid graph is valid")
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn bipartiteness() {
        assert!(Family::Cycle(4).build().unwrap().is_bipartite());
        assert!(!Family::Cycle(3).build().unwrap().is_bipartite());
        assert!(Graph::edgeless(4).is_bipartite());
        let coloring = Family::Path(5).build().unwrap().two_coloring().unwrap();
        assert_eq!(coloring, vec![0, 1, 0, 1, 0]);
    }

    #[test]
    fn neighbors_of_set_examples() {
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(c5.neighbors_of_set(&[0]), BTreeSet::from([1, 4]));
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.neighbors_of_set(&[0]), BTreeSet::from([1, 2, 3]));
        assert!(k4.neighbors_of_set(&[]).is_empty());
        assert_eq!(k4.neighbors_of_set(&[0, 1]), BTreeSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.induced_subgraph(&[0, 2, 3]), Family::Complete(3).build().unwrap());
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(c5.induced_subgraph(&[0, 1, 2]), Family::Path(3).build().unwrap());
        assert_eq!(c5.induced_subgraph(&[]).n(), 0);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]), c5);
    }

    #[test]
    fn isolated_vertices() {
        assert!(!Family::Complete(3).build().unwrap().has_isolated_vertex());
        assert!(Graph::edgeless(1).has_isolated_vertex());
        assert!(Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap().has_isolated_vertex());
    }
}
