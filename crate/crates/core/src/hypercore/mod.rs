//! Hypergraph and graph types, validation, degree statistics and text I/O.

mod graph;
mod hypergraph;
pub mod io;

pub use graph::Graph;
pub use hypergraph::{validate, DegreeProfile, Hypergraph, ValidationResult, Violation, ViolationKind};
pub use io::{read_graph, read_hypergraph, write_graph, write_hypergraph};
