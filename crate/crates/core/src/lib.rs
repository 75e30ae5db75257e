//! Exact secure domination on small graphs, with outerplanarity
//! recognition, the extremal family `G_k`, and exhaustive sweeps.

pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub mod extremal;
pub mod outerplanar;
pub mod secure;
pub mod solver;
pub mod enumeration;
pub mod random;
pub mod sweep;
pub mod cli;
