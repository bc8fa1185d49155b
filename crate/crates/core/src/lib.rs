//! Entrywise powers that preserve positive semidefiniteness on cones of
//! matrices with a prescribed graph sparsity pattern.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, parsing, the standard families and
//!   the search for the largest `K_r` minus one edge.
//! * [`chordal`]: maximum cardinality search, chordality, maximal cliques,
//!   perfect clique orderings and clique-separator decompositions.
//! * [`cones`]: dense symmetric matrices, entrywise power maps, PSD tests,
//!   Schur complements, block splittings and witness matrices.
//! * [`exponent`]: symbolic power sets, critical exponents, counterexample
//!   search and the numeric conjecture scan.
//!
//! Vertices are 0-based in the Rust API. Every text and JSON format uses
//! 1-based labels.

pub mod chordal;
pub mod cones;
pub mod error;
pub mod exponent;
pub mod graph;

pub use chordal::{CliqueOrdering, Decomposition};
pub use cones::{PowerFamily, PsdVerdict, SymMatrix};
pub use error::{Error, Result};
pub use exponent::{HSet, Lattice, WitnessReport};

pub use graph::{Graph, GraphFamily};
