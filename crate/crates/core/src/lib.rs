//! Spectral and combinatorial tools for linear uniform hypergraphs.
//!
//! The adjacency tensor of an `r`-uniform hypergraph is applied directly from
//! the edge list, and its spectral radius is computed with a shifted
//! min/max-ratio power iteration. Around that sit the shadow graph and its
//! transfer bound, exact graph colouring, `r`-expansions with containment
//! search, and constructors for Steiner triple systems, transversal designs
//! and group divisible designs.

pub mod chromatic;
pub mod designs;
mod error;
pub mod expansion;
pub mod harness;
pub mod hypercore;
pub mod shadow;
pub mod spectral;

pub use error::{Error, Result};
pub use hypercore::{DegreeProfile, Graph, Hypergraph};
pub use spectral::{SpectralOptions, SpectralReport};
