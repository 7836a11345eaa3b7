use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

use super::Graph;

/// The kind of invariant an edge list breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    NoVertices,
    UniformityTooSmall,
    WrongArity,
    OutOfRange,
    RepeatedVertex,
    DuplicateEdge,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::NoVertices => "no vertices",
            ViolationKind::UniformityTooSmall => "uniformity below 2",
            ViolationKind::WrongArity => "wrong edge size",
            ViolationKind::OutOfRange => "vertex out of range",
            ViolationKind::RepeatedVertex => "repeated vertex",
            ViolationKind::DuplicateEdge => "duplicate edge",
        }
    }
}

/// First invariant violated by a raw edge list. `edge` is the index into the
/// list as given, `None` for whole-hypergraph violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub edge: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge {
            Some(i) => write!(f, "{} (edge {})", self.kind.as_str(), i),
            None => f.write_str(self.kind.as_str()),
        }
    }
}

/// Outcome of [`validate`]. Violations are data, not errors.
pub type ValidationResult = std::result::Result<(), Violation>;

/// Checks a raw `r`-uniform edge list over `n` vertices. Vertex order inside
/// an edge does not matter; edges are compared as sets.
pub fn validate(n: usize, r: usize, edges: &[Vec<usize>]) -> ValidationResult {
    if n == 0 {
        return Err(Violation { kind: ViolationKind::NoVertices, edge: None });
    }
    if r < 2 {
        return Err(Violation { kind: ViolationKind::UniformityTooSmall, edge: None });
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(edges.len());
    for (i, edge) in edges.iter().enumerate() {
        let violation = |kind| Err(Violation { kind, edge: Some(i) });
        if edge.len() != r {
            return violation(ViolationKind::WrongArity);
        }
        if edge.iter().any(|&v| v >= n) {
            return violation(ViolationKind::OutOfRange);
        }
        let mut sorted = edge.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return violation(ViolationKind::RepeatedVertex);
        }
        if seen.insert(sorted, i).is_some() {
            return violation(ViolationKind::DuplicateEdge);
        }
    }
    Ok(())
}

/// An `r`-uniform hypergraph on vertices `0..n`, held in canonical form:
/// each edge sorted ascending and the edge list sorted lexicographically.
///
/// Edges live in one flat buffer with stride `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    flat: Vec<usize>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        validate(n, r, &edges).map_err(Error::Invalid)?;
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
        }
        edges.sort_unstable();
        let flat = edges.into_iter().flatten().collect();
        Ok(Hypergraph { n, r, flat })
    }

    /// Builds from an edge list already known to be valid and canonical.
    pub(crate) fn from_canonical(n: usize, r: usize, flat: Vec<usize>) -> Self {
        debug_assert_eq!(flat.len() % r, 0);
        Hypergraph { n, r, flat }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.flat.len() / self.r
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.flat[i * self.r..(i + 1) * self.r]
    }

    pub fn edges(&self) -> std::slice::ChunksExact<'_, usize> {
        self.flat.chunks_exact(self.r)
    }

    pub fn to_edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges().map(<[usize]>::to_vec).collect()
    }

    /// Edge indices incident to each vertex, in ascending order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn is_linear(&self) -> bool {
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, e) in self.edges().enumerate() {
            for (a, &x) in e.iter().enumerate() {
                for &y in &e[a + 1..] {
                    if owner.insert((x, y), i).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// One component covering every vertex. Isolated vertices count as
    /// separate components.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges() {
            for w in e.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut by_root: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let root = uf.find(v);
            let slot = *by_root.entry(root).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[slot].push(v);
        }
        comps
    }

    /// Sub-hypergraph induced on one component, relabelled to `0..len`.
    pub fn restrict_to(&self, vertices: &[usize]) -> Result<Hypergraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|e| e.iter().all(|&v| index[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| index[v]).collect())
            .collect();
        Hypergraph::new(vertices.len(), self.r, edges)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0u64; self.n];
        for &v in &self.flat {
            degrees[v] += 1;
        }
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        let average = Ratio::new((self.r * self.edge_count()) as u64, self.n as u64);
        DegreeProfile { degrees, min, max, average }
    }

    /// Map from each covered vertex pair `(x, y)` with `x < y` to the index of
    /// an edge containing it. On linear hypergraphs the edge is unique.
    pub fn pair_index(&self) -> HashMap<(usize, usize), usize> {
        let mut map = HashMap::with_capacity(self.edge_count() * self.r * (self.r - 1) / 2);
        for (i, e) in self.edges().enumerate() {
            for (a, &x) in e.iter().enumerate() {
                for &y in &e[a + 1..] {
                    map.entry((x, y)).or_insert(i);
                }
            }
        }
        map
    }

    /// The graph with the same edges, for `r == 2`.
    pub fn to_graph(&self) -> Option<Graph> {
        (self.r == 2).then(|| Graph::from_canonical(self.n, self.edges().map(|e| (e[0], e[1])).collect()))
    }
}

impl From<&Graph> for Hypergraph {
    fn from(g: &Graph) -> Self {
        let flat = g.edges().iter().flat_map(|&(a, b)| [a, b]).collect();
        Hypergraph::from_canonical(g.n(), 2, flat)
    }
}

/// Per-vertex degrees with exact summary statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<u64>,
    pub min: u64,
    pub max: u64,
    /// `r * e(H) / n`, kept exact.
    pub average: Ratio<u64>,
}

impl DegreeProfile {
    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }

    pub fn average_f64(&self) -> f64 {
        *self.average.numer() as f64 / *self.average.denom() as f64
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
