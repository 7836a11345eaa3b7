use crate::error::{Error, Result};

use super::{Hypergraph, Violation, ViolationKind};

/// A simple graph on `0..n` with a sorted list of edges `(a, b)`, `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let raw: Vec<Vec<usize>> = edges.into_iter().map(|(a, b)| vec![a, b]).collect();
        super::validate(n, 2, &raw).map_err(Error::Invalid)?;
        let mut edges: Vec<(usize, usize)> =
            raw.into_iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
        edges.sort_unstable();
        Ok(Graph { n, edges })
    }

    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid(Violation { kind: ViolationKind::NoVertices, edge: None }));
        }
        Ok(Graph { n, edges: Vec::new() })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
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

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Copy with the `i`-th edge removed.
    pub fn without_edge(&self, i: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Graph { n: self.n, edges }
    }

    pub fn with_isolated(&self, extra: usize) -> Graph {
        Graph { n: self.n + extra, edges: self.edges.clone() }
    }

    pub fn is_connected(&self) -> bool {
        Hypergraph::from(self).is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn canonical_order() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert!(g.has_edge(3, 2));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn families() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::path(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::cycle(5).unwrap().degrees(), vec![2; 5]);
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn hypergraph_round_trip_at_r2() {
        let g = Graph::cycle(5).unwrap();
        let h = Hypergraph::from(&g);
        assert_eq!(h.r(), 2);
        assert_eq!(h.to_graph().unwrap(), g);
    }
}
