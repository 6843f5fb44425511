//! Pathwidth, vertex separation and edge-search numbers, with a focus on
//! Cartesian products of paths and cliques.
//!
//! Everything a solver or constructor produces can be re-checked: path
//! decompositions by [`pathdecomp::validate_path_decomposition`], search
//! strategies by replaying them with [`search::validate_strategy`].

pub mod bounds;
pub mod certificate;
pub mod clique;
pub mod error;
pub mod graph;
pub mod io;
pub mod pathdecomp;
pub mod search;
pub mod vsep;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use pathdecomp::PathDecomposition;
pub use search::{SearchAction, SearchMode, SearchStrategy};
