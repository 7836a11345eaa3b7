//! Shared inputs for the criterion benches.

use linspec::designs::{steiner_triple_system, transversal_design};
use linspec::harness::random_linear_hypergraph;
use linspec::Hypergraph;

/// Steiner triple systems of increasing order.
pub fn sts_ladder() -> Vec<Hypergraph> {
    [7, 15, 31, 63, 127].iter().map(|&n| steiner_triple_system(n).unwrap()).collect()
}

/// A sparse irregular linear hypergraph, so the iteration does real work.
pub fn random_sparse(n: usize, r: usize, seed: u64) -> Hypergraph {
    let target = n * (n - 1) / (r * (r - 1)) / 3;
    random_linear_hypergraph(n, r, target, seed).unwrap().hypergraph
}

pub fn td(r: usize, m: usize) -> Hypergraph {
    transversal_design(r, m).unwrap().0
}
