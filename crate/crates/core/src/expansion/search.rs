//! Exact backtracking for a copy of `F^r` in a linear host.
//!
//! Only the core vertices are branched on. In a linear host a covered pair
//! lies in exactly one edge, so once both endpoints of a base edge are
//! placed, the host edge and its `r - 2` enlargement slots are forced.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph};

use super::{expand, Embedding};

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Embedding),
    Absent,
    BudgetExhausted,
}

/// Convenience wrapper with the default budget; running out of budget is an
/// error here.
pub fn contains_expansion(host: &Hypergraph, f: &Graph, r: usize) -> Result<Option<Embedding>> {
    match search_expansion(host, f, r, DEFAULT_SEARCH_BUDGET)? {
        Search::Found(emb) => Ok(Some(emb)),
        Search::Absent => Ok(None),
        Search::BudgetExhausted => Err(Error::BudgetExhausted(DEFAULT_SEARCH_BUDGET)),
    }
}

pub fn search_expansion(host: &Hypergraph, f: &Graph, r: usize, budget: u64) -> Result<Search> {
    if host.r() != r {
        return Err(Error::UniformityMismatch { host: host.r(), requested: r });
    }
    if !host.is_linear() {
        return Err(Error::NotLinear);
    }
    let exp = expand(f, r)?;
    let order = placement_order(f);
    let mut position = vec![0; f.n()];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    // base edges closed when their later endpoint is placed
    let mut closing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); f.n()];
    for (i, &(a, b)) in f.edges().iter().enumerate() {
        let (early, late) = if position[a] < position[b] { (a, b) } else { (b, a) };
        closing[late].push((i, early));
    }

    let mut state = State {
        host,
        pairs: host.pair_index(),
        order,
        closing,
        image: vec![usize::MAX; f.n()],
        carrier: vec![usize::MAX; f.edge_count()],
        vertex_used: vec![false; host.n()],
        edge_used: vec![false; host.edge_count()],
        nodes: 0,
        budget,
    };
    if f.n() > host.n() {
        return Ok(Search::Absent);
    }
    Ok(match state.place(0) {
        Step::Done => {
            let mut vertex_map = vec![0; exp.vertex_count()];
            vertex_map[..f.n()].copy_from_slice(&state.image);
            for (i, &(a, b)) in f.edges().iter().enumerate() {
                let (ia, ib) = (state.image[a], state.image[b]);
                let slots = host.edge(state.carrier[i]).iter().filter(|&&v| v != ia && v != ib);
                for (&added, &slot) in exp.enlargement(i).iter().zip(slots) {
                    vertex_map[added] = slot;
                }
            }
            Search::Found(Embedding { vertex_map, edge_map: state.carrier })
        }
        Step::Exhausted => Search::Absent,
        Step::OutOfBudget => Search::BudgetExhausted,
    })
}

/// Breadth-first from the lowest unplaced vertex, so every vertex after the
/// first of its component has a placed neighbour.
fn placement_order(f: &Graph) -> Vec<usize> {
    let adj = f.neighbors();
    let mut seen = vec![false; f.n()];
    let mut order = Vec::with_capacity(f.n());
    for root in 0..f.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

enum Step {
    Done,
    Exhausted,
    OutOfBudget,
}

struct State<'a> {
    host: &'a Hypergraph,
    pairs: HashMap<(usize, usize), usize>,
    order: Vec<usize>,
    closing: Vec<Vec<(usize, usize)>>,
    image: Vec<usize>,
    carrier: Vec<usize>,
    vertex_used: Vec<bool>,
    edge_used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    fn place(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Done;
        }
        let v = self.order[depth];
        for candidate in 0..self.host.n() {
            if self.vertex_used[candidate] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.image[v] = candidate;
            self.vertex_used[candidate] = true;
            let mut claimed: Vec<usize> = Vec::new();
            if self.claim_closing_edges(v, &mut claimed) {
                match self.place(depth + 1) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.release(v, &claimed);
            self.vertex_used[candidate] = false;
            self.image[v] = usize::MAX;
        }
        Step::Exhausted
    }

    /// Routes every base edge closed by `v` through its forced host edge,
    /// recording claimed host edges. Returns false on the first conflict,
    /// leaving the partial claims in `claimed` for [`State::release`].
    fn claim_closing_edges(&mut self, v: usize, claimed: &mut Vec<usize>) -> bool {
        let x = self.image[v];
        for idx in 0..self.closing[v].len() {
            let (edge, other) = self.closing[v][idx];
            let y = self.image[other];
            let Some(&he) = self.pairs.get(&(x.min(y), x.max(y))) else {
                return false;
            };
            if self.edge_used[he] {
                return false;
            }
            let slots_free = self.host.edge(he).iter().all(|&s| s == x || s == y || !self.vertex_used[s]);
            if !slots_free {
                return false;
            }
            self.edge_used[he] = true;
            for &s in self.host.edge(he) {
                if s != x && s != y {
                    self.vertex_used[s] = true;
                }
            }
            self.carrier[edge] = he;
            claimed.push(edge);
        }
        true
    }

    fn release(&mut self, v: usize, claimed: &[usize]) {
        let x = self.image[v];
        for &edge in claimed.iter().rev() {
            let he = self.carrier[edge];
            let (_, other) = *self.closing[v].iter().find(|(e, _)| *e == edge).unwrap();
            let y = self.image[other];
            for &s in self.host.edge(he) {
                if s != x && s != y {
                    self.vertex_used[s] = false;
                }
            }
            self.edge_used[he] = false;
            self.carrier[edge] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::named_graph;
    use crate::designs::{steiner_triple_system, transversal_design};
    use crate::expansion::verify_embedding;

    #[test]
    fn fano_contains_loose_triangle() {
        let fano = steiner_triple_system(7).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let emb = contains_expansion(&fano, &k3, 3).unwrap().unwrap();
        assert!(verify_embedding(&fano, &expand(&k3, 3).unwrap(), &emb));
    }

    #[test]
    fn single_edge_host_has_no_two_edge_path() {
        let host = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let p3 = named_graph("p3").unwrap();
        assert_eq!(contains_expansion(&host, &p3, 3).unwrap(), None);
    }

    #[test]
    fn transversal_designs_avoid_expanded_k4() {
        let k4 = Graph::complete(4).unwrap();
        for m in [3, 5] {
            let (td, _) = transversal_design(3, m).unwrap();
            assert_eq!(contains_expansion(&td, &k4, 3).unwrap(), None, "TD(3,{m})");
        }
    }

    #[test]
    fn host_contains_its_own_expansion() {
        let k4 = Graph::complete(4).unwrap();
        let exp = expand(&k4, 4).unwrap();
        let emb = contains_expansion(exp.hypergraph(), &k4, 4).unwrap().unwrap();
        assert!(verify_embedding(exp.hypergraph(), &exp, &emb));
    }

    #[test]
    fn isolated_pattern_vertices_need_free_host_vertices() {
        let fano = steiner_triple_system(7).unwrap();
        // K_3 plus one isolated vertex needs 6 + 1 = 7 vertices: fits exactly
        let g = Graph::complete(3).unwrap().with_isolated(1);
        assert!(contains_expansion(&fano, &g, 3).unwrap().is_some());
        let g = Graph::complete(3).unwrap().with_isolated(2);
        assert_eq!(contains_expansion(&fano, &g, 3).unwrap(), None);
    }

    #[test]
    fn errors_and_budget() {
        let fano = steiner_triple_system(7).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(contains_expansion(&fano, &k3, 4), Err(Error::UniformityMismatch { host: 3, requested: 4 }));
        let shared = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(contains_expansion(&shared, &k3, 3), Err(Error::NotLinear));
        let (td, _) = transversal_design(3, 5).unwrap();
        assert_eq!(search_expansion(&td, &Graph::complete(4).unwrap(), 3, 10).unwrap(), Search::BudgetExhausted);
    }
}
