//! Critical nodes in directed networks.
//!
//! Identifies middlemen (nodes lying on every walk between some ordered pair
//! of other nodes), separates strong from weak middlemen, decides whether a
//! node's function can be taken over by other nodes (contestability), and
//! measures brokerage power next to the usual centrality indices.

pub mod centrality;
pub mod contest;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matrix;
pub mod middleman;
pub mod oracle;
pub mod reach;
pub mod set;

pub use error::{Error, Result};
pub use graph::{DirectedGraph, GraphBuilder, Neighborhood, NodeId, NodeRole};
pub use middleman::MiddlemanClass;
pub use set::{NodeSet, PairSet};
