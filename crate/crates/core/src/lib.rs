//! Exact combinatorics of vertex-cover algebras of bipartite graphs.
//!
//! Everything here is computed from basic k-covers: Hilbert functions,
//! dimension and multiplicity estimates, domain and zero-divisor tests,
//! graphical dimension via standard drawings, cover lattices of unmixed
//! graphs, and the weighted-hypergraph analogue.
//!
//! Library vertex indices are 0-based. Text and JSON formats, and
//! [`BipartiteGraph::from_edges`], use 1-based ids.

pub mod algebra;
pub mod covers;
pub mod drawing;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hilbert;
pub mod hypergraph;
pub mod lattice;
pub mod matching;
pub mod oracle;
pub mod par;
pub mod poset;
pub mod verify;

pub use covers::{Cover, CoverSet};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Side};
pub use hypergraph::WeightedHypergraph;
pub use lattice::CoverLattice;
pub use par::Exec;
pub use poset::FinitePoset;
