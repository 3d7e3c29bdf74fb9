//! Graph topologies on finite simple graphs.
//!
//! The crate computes the inductive dimension of a graph, Ivashchenko
//! homotopy reductions, clique-complex cohomology, and graph topologies given
//! by sub-bases of contractible subgraphs together with their weighted nerve
//! graphs. On top of that sit homeomorphism checks between topological graphs
//! and Lefschetz numbers of graph automorphisms.
//!
//! ```
//! use grafotop::graph::builtin;
//! use grafotop::invariants::dimension;
//!
//! let bull = builtin("bull", &[]).unwrap();
//! assert_eq!(dimension(&bull).to_string(), "22/15");
//! ```

pub mod cohomology;
mod error;
pub mod fixedpoint;
pub mod graph;
pub mod homeo;
pub mod homotopy;
pub mod invariants;
mod linalg;
pub mod random;
mod rational;
pub mod suite;
pub mod topology;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use homotopy::{Budget, TriState};
pub use rational::Rational;
