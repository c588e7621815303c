//! Exact kernel, kernel-perfection and CKI decision procedures for small
//! digraphs, recognizers for the families they are studied on, and an
//! isomorph-free enumerator that checks classification results by
//! exhaustive search.

pub mod cli;
pub mod digraph;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod kernels;
pub mod recognizers;
pub mod structure4t;
pub mod verification;

pub use digraph::{Digraph, DistanceMatrix, VertexSet};
pub use error::{Error, Result};
