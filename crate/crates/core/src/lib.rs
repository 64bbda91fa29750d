//! Uniform hypergraphs around fan expansions.
//!
//! The crate builds the extremal star-cover construction for expansions of
//! fans, decides whether a hypergraph contains the `r`-expansion of a given
//! graph, runs the constructive subroutines used in the upper-bound argument
//! (greedy completion, nice-star extraction, Hall analysis), computes
//! heaviness decompositions with their counting audits, and searches for
//! exact Turán numbers on small vertex sets.
//!
//! | module | contents |
//! |--------|----------|
//! | [`hypercore`] | graphs, hypergraphs, heaviness, link structures |
//! | [`gallery`] | fans, expansions, stars, hyperfans, star covers |
//! | [`embed`] | expansion containment, matchings, nice stars |
//! | [`decompose`] | heaviness classes and counting audits |
//! | [`oracle`] | exact Turán search, isomorphism, canonical forms |
//! | [`cli`] | file formats, certificates and the command-line front end |

pub mod cli;
pub mod decompose;
pub mod embed;
pub mod error;
pub mod gallery;
pub mod hypercore;
pub mod oracle;

pub use error::{Error, Result};
pub use hypercore::{Graph, HyperEdge, Hypergraph, Pair};
