//! `r`-expansions of graphs and their copies inside linear hypergraphs.
//!
//! The expansion `F^r` enlarges every edge of `F` by `r - 2` fresh vertices,
//! distinct edges getting disjoint sets. Base vertices keep their indices and
//! the added vertices follow in canonical edge order, so expansion edge `i`
//! always corresponds to base edge `i`.

mod greedy;
mod search;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypercore::io::{content_lines, parse_fields};
use crate::hypercore::{Graph, Hypergraph};

pub use greedy::{
    embed_from_witness, find_multipartite_witness, greedy_shadow_embedding, greedy_target, GreedyOutcome, GreedyState,
    MultipartiteWitness, PartExhausted, DEFAULT_WITNESS_BUDGET,
};
pub use search::{contains_expansion, search_expansion, Search, DEFAULT_SEARCH_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    base: Graph,
    r: usize,
    hypergraph: Hypergraph,
    /// The `r - 2` added vertices of each base edge.
    enlargement: Vec<Vec<usize>>,
}

impl Expansion {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hypergraph
    }

    pub fn enlargement(&self, edge: usize) -> &[usize] {
        &self.enlargement[edge]
    }

    /// Base vertices embed as themselves.
    pub fn core_map(&self, v: usize) -> usize {
        v
    }

    pub fn vertex_count(&self) -> usize {
        self.hypergraph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.hypergraph.edge_count()
    }
}

pub fn expand(f: &Graph, r: usize) -> Result<Expansion> {
    if r < 2 {
        return Err(Error::Parameter(format!("expansion uniformity must be at least 2, got {r}")));
    }
    if f.edge_count() == 0 {
        return Err(Error::Parameter("cannot expand a graph without edges".into()));
    }
    let extra = r - 2;
    let mut flat = Vec::with_capacity(f.edge_count() * r);
    let mut enlargement = Vec::with_capacity(f.edge_count());
    for (i, &(a, b)) in f.edges().iter().enumerate() {
        let added: Vec<usize> = (0..extra).map(|t| f.n() + i * extra + t).collect();
        flat.extend([a, b]);
        flat.extend(&added);
        enlargement.push(added);
    }
    // added vertices exceed every base index, so base edge order is already
    // the lexicographic order of the expanded edges
    let hypergraph = Hypergraph::from_canonical(f.n() + extra * f.edge_count(), r, flat);
    Ok(Expansion { base: f.clone(), r, hypergraph, enlargement })
}

/// A copy of an expansion inside a host: where each expansion vertex goes and
/// which host edge carries each expansion edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl Embedding {
    /// `vertex_map N`, then `N` lines `expansion_vertex host_vertex`;
    /// `edge_map M`, then `M` lines `expansion_edge host_edge`.
    pub fn write(&self) -> String {
        let mut out = String::new();
        writeln!(out, "vertex_map {}", self.vertex_map.len()).unwrap();
        for (i, v) in self.vertex_map.iter().enumerate() {
            writeln!(out, "{i} {v}").unwrap();
        }
        writeln!(out, "edge_map {}", self.edge_map.len()).unwrap();
        for (i, e) in self.edge_map.iter().enumerate() {
            writeln!(out, "{i} {e}").unwrap();
        }
        out
    }

    pub fn read(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let vertex_map = read_section(&mut lines, "vertex_map")?;
        let edge_map = read_section(&mut lines, "edge_map")?;
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, message: "unexpected content after edge_map".into() });
        }
        Ok(Embedding { vertex_map, edge_map })
    }
}

fn read_section<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, name: &str) -> Result<Vec<usize>> {
    let (line, header) = lines.next().ok_or(Error::Parse { line: 0, message: format!("missing {name} section") })?;
    let count = header
        .strip_prefix(name)
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse { line, message: format!("expected `{name} <count>`") })?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let (line, text) = lines.next().ok_or(Error::Parse { line, message: format!("{name} is short of {count} lines") })?;
        match parse_fields(line, text)?[..] {
            [idx, target] if idx == i => out.push(target),
            _ => return Err(Error::Parse { line, message: format!("expected `{i} <index>`") }),
        }
    }
    Ok(out)
}

/// Re-checks every embedding invariant from scratch.
pub fn verify_embedding(host: &Hypergraph, exp: &Expansion, emb: &Embedding) -> bool {
    if host.r() != exp.r()
        || emb.vertex_map.len() != exp.vertex_count()
        || emb.edge_map.len() != exp.edge_count()
        || emb.vertex_map.iter().any(|&v| v >= host.n())
        || emb.edge_map.iter().any(|&e| e >= host.edge_count())
    {
        return false;
    }
    let distinct = |xs: &[usize]| {
        let mut s = xs.to_vec();
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    };
    if !distinct(&emb.vertex_map) || !distinct(&emb.edge_map) {
        return false;
    }
    exp.hypergraph().edges().zip(&emb.edge_map).all(|(e, &he)| {
        let host_edge = host.edge(he);
        e.iter().all(|&v| host_edge.contains(&emb.vertex_map[v]))
    })
}
