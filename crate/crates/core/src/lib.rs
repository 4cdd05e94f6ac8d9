//! Chromatic symmetric homology of graphs in q-degree zero.
//!
//! The crate builds the chain complex of a graph (in tabloid bases, or
//! restricted to Specht modules of two-column shape), computes integral
//! homology through Smith normal forms, and has the supporting machinery:
//! tableaux and straightening, the symmetric group algebra, characters and
//! chromatic symmetric functions, planarity and graph6 I/O.

pub mod cache;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod group_algebra;
pub mod homology;
pub mod linalg;
pub mod scan;
pub mod snf;
pub mod sparse;
pub mod straighten;
pub mod symfun;
pub mod tableau;

pub use complex::{build_full_complex, build_restricted_complex, IntegerChainComplex};
pub use error::{Error, Result};
pub use graph::{builtin, Graph};
pub use homology::{homology, HomologyGroup};
pub use tableau::{Numbering, Partition};
