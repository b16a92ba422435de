//! Exact counting of orientations of small graphs that avoid a family of
//! forbidden tournaments, with the supporting graph and tournament toolkit.
//!
//! Graphs have at most 16 vertices and are stored as adjacency bitmasks.
//! An orientation is a bit vector over the edge index (see
//! [`graph::SmallGraph::edges`]): bit `e` set means edge `(u, v)`, `u < v`,
//! points from `u` to `v`.

pub mod canon;
pub mod count;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod inequality;
pub mod lemmas;
pub mod norm;
pub mod search;
pub mod symmetrize;
pub mod tournament;

pub use error::{Error, Result};
pub use family::ForbiddenFamily;
pub use graph::{PartitionSpec, SmallGraph, VertexSet};
pub use tournament::{Orientation, Tournament};
