use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;

/// Consecutive rejected draws after which sampling gives up.
pub const FAILURE_BUDGET: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSample {
    pub hypergraph: Hypergraph,
    pub target_edges: usize,
}

impl RandomSample {
    pub fn reached_target(&self) -> bool {
        self.hypergraph.edge_count() == self.target_edges
    }
}

/// Largest edge count a linear `r`-uniform hypergraph on `n` vertices can have
/// by pair counting.
pub fn linear_edge_cap(n: usize, r: usize) -> usize {
    n * (n - 1) / (r * (r - 1))
}

/// Draws random `r`-sets and keeps each one that preserves linearity, until
/// `target_edges` are accepted or [`FAILURE_BUDGET`] consecutive draws fail.
pub fn random_linear_hypergraph(n: usize, r: usize, target_edges: usize, seed: u64) -> Result<RandomSample> {
    if r < 2 || r > n {
        return Err(Error::Parameter(format!("need 2 <= r <= n, got r = {r}, n = {n}")));
    }
    let cap = linear_edge_cap(n, r);
    if target_edges > cap {
        return Err(Error::Parameter(format!("{target_edges} edges exceed the linear cap n(n-1)/(r(r-1)) = {cap}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covered = vec![false; n * n];
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(target_edges);
    let mut failures = 0;
    while edges.len() < target_edges && failures < FAILURE_BUDGET {
        let mut e = sample(&mut rng, n, r).into_vec();
        e.sort_unstable();
        let pairs = || e.iter().enumerate().flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| a * n + b));
        if pairs().any(|p| covered[p]) {
            failures += 1;
            continue;
        }
        pairs().for_each(|p| covered[p] = true);
        edges.push(e);
        failures = 0;
    }
    Ok(RandomSample { hypergraph: Hypergraph::new(n, r, edges)?, target_edges })
}

/// A connected random linear hypergraph; retries derived seeds until the
/// sample is connected. Parameters are drawn from `seed` as well.
pub fn random_connected_linear(seed: u64, r: usize, max_n: usize) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for attempt in 0..1_000u64 {
        let n = rng.gen_range(r + 2..=max_n);
        let cap = linear_edge_cap(n, r);
        let min_edges = (n - 1).div_ceil(r - 1);
        if min_edges > cap {
            continue;
        }
        let target = rng.gen_range(min_edges..=cap);
        let sample = random_linear_hypergraph(n, r, target, seed.wrapping_mul(1_000).wrapping_add(attempt))?;
        if sample.hypergraph.is_connected() {
            return Ok(sample.hypergraph);
        }
    }
    Err(Error::Parameter(format!("no connected sample for r = {r}, n <= {max_n}")))
}
