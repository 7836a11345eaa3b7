//! Exact chromatic number for small graphs and the complete multipartite
//! families used as extremal patterns.

use crate::error::{Error, Result};
use crate::hypercore::Graph;

/// Largest graph accepted by the exact search.
pub const MAX_VERTICES: usize = 40;

/// Default cap on backtracking nodes per colourability test.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Part sizes `s_1, ..., s_k` of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::Parameter(format!("part sizes must be a nonempty list of positive integers, got {sizes:?}")));
        }
        Ok(PartSizes(sizes))
    }

    pub fn uniform(k: usize, size: usize) -> Result<Self> {
        PartSizes::new(vec![size; k])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Consecutive index blocks, one per part.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&s| {
                start += s;
                start - s..start
            })
            .collect()
    }
}

pub fn complete_multipartite(parts: &PartSizes) -> Graph {
    let blocks = parts.blocks();
    let mut edges = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        for u in a.clone() {
            for b in &blocks[i + 1..] {
                edges.extend(b.clone().map(|v| (u, v)));
            }
        }
    }
    Graph::from_canonical(parts.total(), edges)
}

/// `K_k^+(s_1, ..., s_k)`: the complete multipartite graph with the first two
/// vertices of the first part joined.
pub fn complete_multipartite_plus(parts: &PartSizes) -> Result<Graph> {
    if parts.sizes()[0] < 2 {
        return Err(Error::Parameter("the first part needs at least 2 vertices".into()));
    }
    let base = complete_multipartite(parts);
    Graph::new(base.n(), base.edges().iter().copied().chain([(0, 1)]))
}

/// `T_k(n)`: parts of size `ceil(n/k)` first, then `floor(n/k)`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let sizes = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
    Ok(complete_multipartite(&PartSizes::new(sizes)?))
}

/// Small named graphs: `k<n>` complete, `p<n>` path on `n` vertices,
/// `c<n>` cycle, `e<n>` edgeless, `t<k>_<n>` Turán graph.
pub fn named_graph(name: &str) -> Result<Graph> {
    let bad = || Error::Parameter(format!("unknown graph name {name:?}"));
    let lower = name.to_ascii_lowercase();
    let (kind, rest) = lower.split_at(1.min(lower.len()));
    if kind == "t" {
        let (k, n) = rest.split_once('_').ok_or_else(bad)?;
        return turan_graph(n.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?);
    }
    let n: usize = rest.parse().map_err(|_| bad())?;
    match kind {
        "k" => Graph::complete(n),
        "p" => Graph::path(n),
        "c" => Graph::cycle(n),
        "e" => Graph::empty(n),
        _ => Err(bad()),
    }
}

struct Bitsets {
    adj: Vec<u64>,
}

impl Bitsets {
    fn new(g: &Graph) -> Result<Self> {
        if g.n() > MAX_VERTICES {
            return Err(Error::SizeLimit { n: g.n(), limit: MAX_VERTICES });
        }
        let mut adj = vec![0u64; g.n()];
        for &(a, b) in g.edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Bitsets { adj })
    }

    /// Lowest-colour-first colouring in index order.
    fn greedy_colours(&self) -> usize {
        let mut colour = vec![usize::MAX; self.adj.len()];
        let mut used = 0;
        for v in 0..self.adj.len() {
            let taken: u64 = (0..v).filter(|&u| self.adj[v] >> u & 1 == 1).fold(0, |m, u| m | 1 << colour[u]);
            colour[v] = (!taken).trailing_zeros() as usize;
            used = used.max(colour[v] + 1);
        }
        used
    }

    /// Largest clique found by extending from each start vertex with the
    /// lowest-index common neighbour.
    fn greedy_clique(&self) -> usize {
        let n = self.adj.len();
        (0..n)
            .map(|start| {
                let mut cand = self.adj[start];
                let mut size = 1;
                while cand != 0 {
                    let v = cand.trailing_zeros() as usize;
                    size += 1;
                    cand &= self.adj[v];
                }
                size
            })
            .max()
            .unwrap_or(0)
    }

    fn colourable(&self, k: usize, budget: u64) -> Result<bool> {
        let mut colour = vec![usize::MAX; self.adj.len()];
        let mut nodes = 0u64;
        self.extend(0, k, 0, &mut colour, &mut nodes, budget)
    }

    fn extend(&self, v: usize, k: usize, used: usize, colour: &mut [usize], nodes: &mut u64, budget: u64) -> Result<bool> {
        if v == self.adj.len() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        let taken: u64 = (0..v).filter(|&u| self.adj[v] >> u & 1 == 1).fold(0, |m, u| m | 1 << colour[u]);
        // a fresh colour is interchangeable with any other unused one
        for c in 0..k.min(used + 1) {
            if taken >> c & 1 == 0 {
                colour[v] = c;
                if self.extend(v + 1, k, used.max(c + 1), colour, nodes, budget)? {
                    return Ok(true);
                }
            }
        }
        colour[v] = usize::MAX;
        Ok(false)
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_budget(g, DEFAULT_BUDGET)
}

/// Exact `chi(G)`: raises the clique lower bound until a colouring is found
/// or the greedy upper bound is reached.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    let bits = Bitsets::new(g)?;
    if g.edge_count() == 0 {
        return Ok(usize::from(g.n() > 0));
    }
    let upper = bits.greedy_colours();
    let mut k = bits.greedy_clique();
    while k < upper {
        if bits.colourable(k, budget)? {
            return Ok(k);
        }
        k += 1;
    }
    Ok(upper)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criticality {
    pub critical: bool,
    /// First edge in canonical order whose removal drops the chromatic number.
    pub witness: Option<(usize, usize)>,
}

/// `(k+1)`-colour-critical in the edge sense: `chi(G) = k + 1` and some edge
/// `e` has `chi(G - e) = k`.
pub fn is_color_critical(g: &Graph, k_plus_1: usize) -> Result<Criticality> {
    let none = Criticality { critical: false, witness: None };
    if k_plus_1 == 0 || chromatic_number(g)? != k_plus_1 {
        return Ok(none);
    }
    for (i, &e) in g.edges().iter().enumerate() {
        if chromatic_number(&g.without_edge(i))? == k_plus_1 - 1 {
            return Ok(Criticality { critical: true, witness: Some(e) });
        }
    }
    Ok(none)
}
