use thiserror::Error;

use crate::hypercore::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    Invalid(Violation),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    Range { line: usize, vertex: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("hypergraph is not linear")]
    NotLinear,

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("vector does not have unit {r}-norm (norm = {norm})")]
    NotUnitNorm { r: usize, norm: f64 },

    #[error("uniformity mismatch: host is {host}-uniform, requested {requested}")]
    UniformityMismatch { host: usize, requested: usize },

    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("no complete multipartite witness found in the shadow graph")]
    NoWitness,
}
