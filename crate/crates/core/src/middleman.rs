//! Middlemen, their strong/weak classification, and brokerage-based power.
//!
//! A node `h` is a middleman for the ordered pair `(i, j)` of two other nodes
//! when `j` is reachable from `i` but every walk from `i` to `j` passes
//! through `h`. Deleting `h` therefore disconnects the pair.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::reach::{
    all_successor_sets, component_count, distances_from, distances_to, predecessor_set,
    successor_set, successor_set_without,
};
use crate::set::NodeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiddlemanClass {
    NonMiddleman,
    WeakMiddleman,
    StrongMiddleman,
}

impl MiddlemanClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MiddlemanClass::NonMiddleman => "none",
            MiddlemanClass::WeakMiddleman => "weak",
            MiddlemanClass::StrongMiddleman => "strong",
        }
    }

    /// Table marker: `*` for weak, `**` for strong.
    pub fn marker(self) -> &'static str {
        match self {
            MiddlemanClass::NonMiddleman => "",
            MiddlemanClass::WeakMiddleman => "*",
            MiddlemanClass::StrongMiddleman => "**",
        }
    }

    pub fn is_middleman(self) -> bool {
        self != MiddlemanClass::NonMiddleman
    }
}

/// Nodes lying on every walk from `i` to `j`, endpoints excluded.
pub fn pair_middleman_set(g: &DirectedGraph, i: NodeId, j: NodeId) -> Result<NodeSet> {
    if i == j {
        return Err(Error::SameEndpoints(g.label(i).to_owned()));
    }
    let n = g.node_count();
    let mut result = NodeSet::empty(n);
    let from_i = successor_set(g, i);
    if !from_i.contains(j) {
        return Ok(result);
    }
    // only nodes between i and j can be unavoidable
    let mut between = from_i;
    between.intersect_with(&predecessor_set(g, j));
    for h in between.iter().filter(|&h| h != i && h != j) {
        if !successor_set_without(g, i, h).contains(j) {
            result.insert(h);
        }
    }
    Ok(result)
}

/// Ordered pairs `(a, b)` for which `h` is a middleman.
pub fn brokered_pairs(g: &DirectedGraph, h: NodeId) -> Vec<(NodeId, NodeId)> {
    let mut pairs = Vec::new();
    for a in predecessor_set(g, h).iter() {
        let before = successor_set(g, a);
        let after = successor_set_without(g, a, h);
        for b in before.iter() {
            if b != h && b != a && !after.contains(b) {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// The set of all middlemen of the network.
pub fn middleman_set(g: &DirectedGraph) -> NodeSet {
    let flags: Vec<bool> = g
        .nodes()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|h| !brokered_pairs(g, h).is_empty())
        .collect();
    NodeSet::from_ids(g.node_count(), g.nodes().filter(|h| flags[h.index()]))
}

/// Strong, weak or non-middleman.
///
/// A middleman is strong when deleting it increases the number of weakly
/// connected components; on a weakly connected network this means the
/// remainder falls apart.
pub fn classify(g: &DirectedGraph, h: NodeId) -> MiddlemanClass {
    if brokered_pairs(g, h).is_empty() {
        MiddlemanClass::NonMiddleman
    } else {
        classify_middleman(g, h)
    }
}

fn classify_middleman(g: &DirectedGraph, h: NodeId) -> MiddlemanClass {
    if component_count(&g.remove_node(h)) > component_count(g) {
        MiddlemanClass::StrongMiddleman
    } else {
        MiddlemanClass::WeakMiddleman
    }
}

fn total_reach(sets: &[NodeSet]) -> u64 {
    sets.iter().map(|s| s.len() as u64).sum()
}

/// Brokerage b_i: pairs disconnected by deleting `i`, from the drop in total
/// reachability once `i`'s own reach and predecessors are discounted.
pub fn brokerage(g: &DirectedGraph, i: NodeId) -> u64 {
    let before = all_successor_sets(g, None);
    brokerage_with(g, i, &before)
}

fn brokerage_with(g: &DirectedGraph, i: NodeId, before: &[NodeSet]) -> u64 {
    let after = all_successor_sets(g, Some(i));
    let own = before[i.index()].len() as u64 + predecessor_set(g, i).len() as u64;
    total_reach(before) - total_reach(&after) - own
}

/// Brokerage of every node, in node order.
pub fn brokerage_all(g: &DirectedGraph) -> Vec<u64> {
    let before = all_successor_sets(g, None);
    g.nodes()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| brokerage_with(g, i, &before))
        .collect()
}

/// Total indirect reach of the network and the derived normaliser.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PotentialBrokerage {
    /// Sum over nodes of indirect successors, |S_i| - |s_i|.
    pub b_prime: u64,
    /// `max(b_prime, 1)`.
    pub normalizer: u64,
}

pub fn potential_brokerage(g: &DirectedGraph) -> PotentialBrokerage {
    let b_prime = g
        .nodes()
        .map(|i| (successor_set(g, i).len() - g.out_degree(i)) as u64)
        .sum();
    PotentialBrokerage {
        b_prime,
        normalizer: b_prime.max(1),
    }
}

/// Middleman power ν_i = b_i / B, exact.
pub fn middleman_power(g: &DirectedGraph, i: NodeId) -> Ratio<u64> {
    Ratio::new(brokerage(g, i), potential_brokerage(g).normalizer)
}

/// Middleman power of every node, in node order.
pub fn middleman_power_all(g: &DirectedGraph) -> Vec<Ratio<u64>> {
    let normalizer = potential_brokerage(g).normalizer;
    brokerage_all(g)
        .into_iter()
        .map(|b| Ratio::new(b, normalizer))
        .collect()
}

/// Distance-weighted middleman power.
#[derive(Clone, Debug, PartialEq)]
pub struct DistancePower {
    pub exact: BigRational,
    pub value: f64,
}

/// Sum of `1 / (d(a, h) * d(h, b))` over the pairs `(a, b)` brokered by `h`.
/// Zero for non-middlemen.
pub fn distance_based_power(g: &DirectedGraph, h: NodeId) -> DistancePower {
    let pairs = brokered_pairs(g, h);
    let to_h = distances_to(g, h);
    let from_h = distances_from(g, h);
    // group by denominator so the exact sum stays cheap
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for (a, b) in pairs {
        let da = to_h[a.index()].expect("brokered pair source reaches the middleman");
        let db = from_h[b.index()].expect("middleman reaches brokered pair target");
        *counts.entry((da * db) as u64).or_default() += 1;
    }
    let mut exact = BigRational::from_integer(BigInt::from(0));
    for (&denominator, &count) in &counts {
        exact += BigRational::new(BigInt::from(count), BigInt::from(denominator));
    }
    let value = exact.to_f64().unwrap_or(f64::NAN);
    DistancePower { exact, value }
}

/// Per-node middleman results for a whole network.
#[derive(Clone, Debug)]
pub struct MiddlemanProfile {
    pub brokerage: Vec<u64>,
    pub potential: PotentialBrokerage,
    pub power: Vec<Ratio<u64>>,
    pub distance_power: Vec<DistancePower>,
    pub class: Vec<MiddlemanClass>,
}

impl MiddlemanProfile {
    pub fn compute(g: &DirectedGraph) -> Self {
        let brokerage = brokerage_all(g);
        let potential = potential_brokerage(g);
        let power = brokerage
            .iter()
            .map(|&b| Ratio::new(b, potential.normalizer))
            .collect();
        let ids: Vec<NodeId> = g.nodes().collect();
        let distance_power = ids
            .par_iter()
            .map(|&h| distance_based_power(g, h))
            .collect();
        let class = ids
            .par_iter()
            .map(|&h| {
                if brokerage[h.index()] > 0 {
                    classify_middleman(g, h)
                } else {
                    MiddlemanClass::NonMiddleman
                }
            })
            .collect();
        MiddlemanProfile {
            brokerage,
            potential,
            power,
            distance_power,
            class,
        }
    }

    /// Node ids ranked by descending power, then brokerage, then node order.
    pub fn ranking(&self) -> Vec<NodeId> {
        let mut order: Vec<NodeId> = (0..self.brokerage.len()).map(NodeId::new).collect();
        order.sort_by(|&a, &b| {
            self.power[b.index()]
                .cmp(&self.power[a.index()])
                .then(self.brokerage[b.index()].cmp(&self.brokerage[a.index()]))
                .then(a.cmp(&b))
        });
        order
    }
}

/// Every direct predecessor of `i` is, or links directly to, every direct
/// successor of `i`. Such a node can always be bypassed, so it is never a
/// middleman.
pub fn dominated(g: &DirectedGraph, i: NodeId) -> bool {
    g.successors(i).iter().all(|&j| {
        g.predecessors(i)
            .iter()
            .all(|&p| p == j || g.predecessors(j).contains(&p))
    })
}

pub fn is_middleman(g: &DirectedGraph, h: NodeId) -> bool {
    !brokered_pairs(g, h).is_empty()
}
