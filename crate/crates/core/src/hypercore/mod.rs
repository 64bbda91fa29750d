//! Uniform hypergraphs, simple graphs and the link / heaviness queries the
//! rest of the crate is built on.
//!
//! Vertices are dense indices `0..n`. Hyperedges are kept sorted and
//! deduplicated, and every hypergraph maintains an index from each vertex
//! pair to the hyperedges containing it, so heaviness queries do not rescan.

mod graph;
mod hypergraph;
mod pair;

pub use graph::Graph;
pub use hypergraph::{subedges, HyperEdge, Hypergraph};
pub use pair::Pair;
