//! Graver bases and universal Gröbner bases of toric ideals of graphs.
//!
//! The toric ideal `I_G` of a simple graph lives in the polynomial ring with
//! one variable per edge. Its Graver basis consists of the binomials of
//! primitive even closed walks; the universal Gröbner basis is the subset of
//! walks that are *mixed*, meaning no cyclic block of the walk has all of its
//! edges on one side of the binomial.
//!
//! * [`graver`] enumerates walk binomials and the Graver basis of small graphs.
//! * [`ugb`] filters a Graver basis down to the universal Gröbner basis by
//!   peeling cycles off each walk, with two independent mixedness checks.
//! * [`io`] reads graph and basis files and prints binomials.

pub mod binomial;
pub mod blocks;
pub mod error;
pub mod families;
pub mod graph;
pub mod graver;
pub mod io;
pub mod par;
pub mod primitive;
pub mod ugb;
pub mod verify;

pub use binomial::{support_walkgraph, walk_to_binomial, Binomial, Side, WalkGraph};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use error::{BinomialError, Error, GraphError, Result, WalkError};
pub use graph::{EdgeSubset, Graph};
pub use graver::{
    degree_histogram, enumerate_walk_binomials, graver_basis, BasisSet, EnumerationLimits, Source,
};
pub use par::Execution;
pub use primitive::{is_primitive_bruteforce, is_primitive_structural, Primitivity, Violation};
pub use ugb::{
    filter_element, is_mixed_blocks, is_mixed_forest, universal_groebner_basis, FilterTrace,
    Verdict,
};
