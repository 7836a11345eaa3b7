//! Greedy construction of `K_k(l,...,l)^r` (or `K_k^+(l,...,l)^r`) inside a
//! linear host from a large complete multipartite subgraph of its shadow.
//!
//! Vertices are drawn part by part. `selected` holds the chosen core vertices,
//! `blocked` the enlargement vertices `E_xy \ {x, y}` of every covered pair
//! inside `selected`, and `cross_blocked` the enlargement vertices of pairs
//! between `selected` and `blocked`. A new vertex from part `i >= 2` must
//! avoid all three sets; the first part only avoids the first two. Keeping
//! those sets clear is exactly what makes the enlargement sets of the chosen
//! pairs pairwise disjoint and disjoint from the core.

use std::collections::{BTreeSet, HashMap};

use crate::chromatic::{complete_multipartite, complete_multipartite_plus, PartSizes};
use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph};
use crate::shadow::shadow;

use super::{expand, verify_embedding, Embedding, Expansion};

pub const DEFAULT_WITNESS_BUDGET: u64 = 10_000_000;

/// Parts `V_1, ..., V_k` of a complete multipartite subgraph of the shadow.
/// With `plus`, the first two vertices of `V_1` are also adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteWitness {
    pub parts: Vec<Vec<usize>>,
    pub plus: bool,
}

impl MultipartiteWitness {
    pub fn is_present_in(&self, g: &Graph) -> bool {
        let cross = self.parts.iter().enumerate().all(|(i, a)| {
            self.parts[i + 1..].iter().all(|b| a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y))))
        });
        let critical = !self.plus || (self.parts[0].len() >= 2 && g.has_edge(self.parts[0][0], self.parts[0][1]));
        let mut all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        let disjoint = all.windows(2).all(|w| w[0] != w[1]);
        cross && critical && disjoint
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GreedyState {
    pub selected: Vec<usize>,
    pub blocked: BTreeSet<usize>,
    pub cross_blocked: BTreeSet<usize>,
}

impl GreedyState {
    /// With `j = |selected|`: `|blocked| <= (r-2) C(j,2)` and
    /// `|cross_blocked| <= j (r-2)^2 C(j,2)`.
    pub fn within_counting_bounds(&self, r: usize) -> bool {
        let j = self.selected.len();
        let pairs = j * j.saturating_sub(1) / 2;
        self.blocked.len() <= (r - 2) * pairs && self.cross_blocked.len() <= j * (r - 2) * (r - 2) * pairs
    }
}

/// The procedure ran out of admissible vertices in some part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartExhausted {
    /// Zero-based part index.
    pub part: usize,
    /// Number of vertices selected so far.
    pub selected: usize,
    pub part_size: usize,
    /// Part size the counting argument asks for at this step.
    pub guard: usize,
    pub state: GreedyState,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOutcome {
    Embedded { witness: MultipartiteWitness, expansion: Expansion, embedding: Embedding },
    PartExhausted(PartExhausted),
}

/// `K_k(l,...,l)`, or `K_k^+(l,...,l)` with `plus`.
pub fn greedy_target(k: usize, l: usize, plus: bool) -> Result<Graph> {
    let parts = PartSizes::uniform(k, l)?;
    if plus {
        complete_multipartite_plus(&parts)
    } else {
        Ok(complete_multipartite(&parts))
    }
}

/// Finds a witness in the shadow of `host` (largest part size first, down to
/// `l`) and runs the greedy construction on it.
pub fn greedy_shadow_embedding(host: &Hypergraph, k: usize, l: usize, plus: bool) -> Result<GreedyOutcome> {
    check_params(k, l, plus)?;
    if !host.is_linear() {
        return Err(Error::NotLinear);
    }
    let g = shadow(host);
    let witness = find_multipartite_witness(&g, k, l, plus, DEFAULT_WITNESS_BUDGET)?.ok_or(Error::NoWitness)?;
    embed_from_witness(host, &witness, l)
}

fn check_params(k: usize, l: usize, plus: bool) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::Parameter(format!("need k >= 1 and l >= 1, got k = {k}, l = {l}")));
    }
    if plus && l < 2 {
        return Err(Error::Parameter("the plus variant needs parts of size at least 2".into()));
    }
    Ok(())
}

/// Searches `g` for `K_k(p,...,p)` (plus a first-part edge when `plus`) with
/// the largest `p >= min_part` that exists.
pub fn find_multipartite_witness(
    g: &Graph,
    k: usize,
    min_part: usize,
    plus: bool,
    budget: u64,
) -> Result<Option<MultipartiteWitness>> {
    check_params(k, min_part, plus)?;
    let adj = g.neighbors().into_iter().map(|list| list.into_iter().collect::<BTreeSet<_>>()).collect::<Vec<_>>();
    let mut nodes = 0u64;
    for p in (min_part..=g.n() / k).rev() {
        let mut finder = WitnessFinder { g, adj: &adj, k, p, plus, parts: Vec::new(), nodes: &mut nodes, budget };
        let all: Vec<usize> = (0..g.n()).collect();
        if finder.fill(&all)? {
            let mut parts = finder.parts;
            if plus {
                order_critical_edge_first(g, &mut parts[0]);
            }
            return Ok(Some(MultipartiteWitness { parts, plus }));
        }
    }
    Ok(None)
}

fn order_critical_edge_first(g: &Graph, part: &mut Vec<usize>) {
    let (a, b) = (0..part.len())
        .flat_map(|i| (i + 1..part.len()).map(move |j| (i, j)))
        .find(|&(i, j)| g.has_edge(part[i], part[j]))
        .expect("plus witness has an edge inside its first part");
    let (x, y) = (part[a], part[b]);
    part.retain(|&v| v != x && v != y);
    part.splice(0..0, [x, y]);
}

struct WitnessFinder<'a> {
    g: &'a Graph,
    adj: &'a [BTreeSet<usize>],
    k: usize,
    p: usize,
    plus: bool,
    parts: Vec<Vec<usize>>,
    nodes: &'a mut u64,
    budget: u64,
}

impl WitnessFinder<'_> {
    /// `candidates`: unused vertices adjacent to everything placed so far in
    /// earlier parts.
    fn fill(&mut self, candidates: &[usize]) -> Result<bool> {
        let remaining = self.k - self.parts.len();
        if remaining == 0 {
            return Ok(true);
        }
        if candidates.len() < remaining * self.p {
            return Ok(false);
        }
        let mut chosen = Vec::with_capacity(self.p);
        self.choose(candidates, 0, &mut chosen)
    }

    fn choose(&mut self, candidates: &[usize], from: usize, chosen: &mut Vec<usize>) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        if chosen.len() == self.p {
            let first_part = self.parts.is_empty();
            if first_part && self.plus && !self.has_inner_edge(chosen) {
                return Ok(false);
            }
            let next: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v) && chosen.iter().all(|c| self.adj[*c].contains(v)))
                .collect();
            // parts after the distinguished first one are interchangeable
            let next: Vec<usize> = match self.parts.len() {
                0 if self.plus => next,
                _ => next.into_iter().filter(|&v| v > chosen[0]).collect(),
            };
            self.parts.push(chosen.clone());
            if self.fill(&next)? {
                return Ok(true);
            }
            self.parts.pop();
            return Ok(false);
        }
        let need = self.p - chosen.len();
        for i in from..candidates.len() {
            if candidates.len() - i < need {
                break;
            }
            chosen.push(candidates[i]);
            if self.choose(candidates, i + 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    fn has_inner_edge(&self, part: &[usize]) -> bool {
        part.iter().enumerate().any(|(i, &a)| part[i + 1..].iter().any(|&b| self.g.has_edge(a, b)))
    }
}

/// Runs the greedy construction on a given witness, taking `l` vertices from
/// each part in lowest-index-first order.
pub fn embed_from_witness(host: &Hypergraph, witness: &MultipartiteWitness, l: usize) -> Result<GreedyOutcome> {
    let k = witness.parts.len();
    check_params(k, l, witness.plus)?;
    if !host.is_linear() {
        return Err(Error::NotLinear);
    }
    if !witness.is_present_in(&shadow(host)) {
        return Err(Error::Parameter("witness is not a complete multipartite subgraph of the shadow".into()));
    }
    let r = host.r();
    let pairs = host.pair_index();
    let rest = |x: usize, y: usize| -> Vec<usize> {
        match pairs.get(&(x.min(y), x.max(y))) {
            Some(&e) => host.edge(e).iter().copied().filter(|&v| v != x && v != y).collect(),
            None => Vec::new(),
        }
    };

    let mut state = GreedyState::default();
    let add = |state: &mut GreedyState, v: usize| {
        let fresh: Vec<usize> = state.selected.iter().flat_map(|&w| rest(v, w)).collect();
        state.selected.push(v);
        state.blocked.extend(fresh);
    };

    if witness.plus {
        let part = &witness.parts[0];
        add(&mut state, part[0]);
        add(&mut state, part[1]);
    }
    for (i, part) in witness.parts.iter().enumerate() {
        while state.selected.len() < (i + 1) * l {
            assert!(state.within_counting_bounds(r), "counting bound violated at {} selected", state.selected.len());
            if i > 0 {
                state.cross_blocked = state
                    .selected
                    .iter()
                    .flat_map(|&x| state.blocked.iter().flat_map(move |&y| rest(x, y)))
                    .collect();
            }
            let free = |v: &&usize| {
                !state.selected.contains(v) && !state.blocked.contains(v) && !state.cross_blocked.contains(v)
            };
            let Some(&v) = part.iter().find(free) else {
                let j = state.selected.len();
                let pairs_so_far = j * j.saturating_sub(1) / 2;
                let cross = if i > 0 { j * (r - 2) * (r - 2) * pairs_so_far } else { 0 };
                return Ok(GreedyOutcome::PartExhausted(PartExhausted {
                    part: i,
                    selected: j,
                    part_size: part.len(),
                    guard: j + (r - 2) * pairs_so_far + cross + 1,
                    state,
                }));
            };
            add(&mut state, v);
        }
    }
    assert!(state.within_counting_bounds(r));

    let target = greedy_target(k, l, witness.plus)?;
    let expansion = expand(&target, r)?;
    let embedding = realise(host, &pairs, &expansion, &state.selected);
    debug_assert!(verify_embedding(host, &expansion, &embedding));
    let used = MultipartiteWitness {
        parts: state.selected.chunks(l).map(<[usize]>::to_vec).collect(),
        plus: witness.plus,
    };
    Ok(GreedyOutcome::Embedded { witness: used, expansion, embedding })
}

fn realise(host: &Hypergraph, pairs: &HashMap<(usize, usize), usize>, exp: &Expansion, core: &[usize]) -> Embedding {
    let mut vertex_map = vec![usize::MAX; exp.vertex_count()];
    vertex_map[..core.len()].copy_from_slice(core);
    let mut edge_map = Vec::with_capacity(exp.edge_count());
    for (i, &(a, b)) in exp.base().edges().iter().enumerate() {
        let (x, y) = (core[a], core[b]);
        let he = pairs[&(x.min(y), x.max(y))];
        let slots = host.edge(he).iter().filter(|&&v| v != x && v != y);
        for (&added, &slot) in exp.enlargement(i).iter().zip(slots) {
            vertex_map[added] = slot;
        }
        edge_map.push(he);
    }
    Embedding { vertex_map, edge_map }
}
