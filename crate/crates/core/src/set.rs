//! Node and pair sets keyed by dense node ids.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::NodeId;

/// A set of nodes of one graph, stored as a bitset over node ids.
///
/// Iteration yields ids in ascending order, which is the graph's input
/// node order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: FixedBitSet,
}

impl NodeSet {
    pub fn empty(capacity: usize) -> Self {
        NodeSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        NodeSet { bits }
    }

    pub fn from_ids(capacity: usize, ids: impl IntoIterator<Item = NodeId>) -> Self {
        let mut set = Self::empty(capacity);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, id: NodeId) -> bool {
        !self.bits.put(id.index())
    }

    pub fn remove(&mut self, id: NodeId) {
        self.bits.set(id.index(), false);
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.bits.contains(id.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &NodeSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.bits.ones().map(NodeId::new)
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|id| id.index()))
            .finish()
    }
}

/// A set of ordered node pairs, sorted lexicographically by id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet(BTreeSet<(NodeId, NodeId)>);

impl PairSet {
    pub fn new() -> Self {
        PairSet(BTreeSet::new())
    }

    pub fn insert(&mut self, a: NodeId, b: NodeId) -> bool {
        self.0.insert((a, b))
    }

    pub fn contains(&self, a: NodeId, b: NodeId) -> bool {
        self.0.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(NodeId, NodeId)> for PairSet {
    fn from_iter<T: IntoIterator<Item = (NodeId, NodeId)>>(iter: T) -> Self {
        PairSet(iter.into_iter().collect())
    }
}
