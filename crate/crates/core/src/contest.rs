//! Contestability: can other nodes take over everything a node intermediates?
//!
//! A node set `C` contests `i` when, after deleting `i`, every pair in the
//! coverage of `i` is still served by some member `j` of `C`: the pair's
//! source is `j` or reaches `j`, and `j` reaches the pair's target.

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, NodeRole};
use crate::middleman::is_middleman;
use crate::reach::{
    coverage, predecessor_set, predecessor_set_without, successor_set, successor_set_without,
};
use crate::set::NodeSet;

/// Largest network `minimal_contesting_sets` will search exhaustively.
pub const MINIMAL_SEARCH_LIMIT: usize = 16;

/// Outcome of testing whether a node set contests a node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContestResult {
    pub contested: bool,
    /// Set when the node has empty coverage (sources, sinks, isolated
    /// nodes), so any set contests it trivially.
    pub vacuous: bool,
    pub contesting_set: NodeSet,
    /// Coverage pairs no member of the set can serve.
    pub uncovered: Vec<(NodeId, NodeId)>,
}

/// Verdict on a single node against all possible contesting sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Contestation {
    Contested,
    Uncontested,
    /// Not an intermediary; contested only in the empty sense.
    Vacuous,
}

impl Contestation {
    pub fn as_str(self) -> &'static str {
        match self {
            Contestation::Contested => "contested",
            Contestation::Uncontested => "uncontested",
            Contestation::Vacuous => "vacuous",
        }
    }
}

/// The part of a contesting member's reach that survives deleting `i`.
struct Service {
    sources: NodeSet,
    targets: NodeSet,
}

impl Service {
    fn of(g: &DirectedGraph, j: NodeId, removed: NodeId) -> Self {
        let mut sources = predecessor_set_without(g, j, removed);
        sources.insert(j);
        Service {
            sources,
            targets: successor_set_without(g, j, removed),
        }
    }

    fn serves(&self, a: NodeId, b: NodeId) -> bool {
        self.sources.contains(a) && self.targets.contains(b)
    }
}

/// Tests whether the node set `contesting` contests `i`.
pub fn contests(g: &DirectedGraph, contesting: &NodeSet, i: NodeId) -> Result<ContestResult> {
    if contesting.contains(i) {
        return Err(Error::SelfContest(g.label(i).to_owned()));
    }
    let pairs = coverage(g, i);
    let services: Vec<Service> = if pairs.is_empty() {
        Vec::new()
    } else {
        contesting.iter().map(|j| Service::of(g, j, i)).collect()
    };
    let uncovered: Vec<(NodeId, NodeId)> = pairs
        .iter()
        .filter(|&(a, b)| !services.iter().any(|s| s.serves(a, b)))
        .collect();
    Ok(ContestResult {
        contested: uncovered.is_empty(),
        vacuous: pairs.is_empty(),
        contesting_set: contesting.clone(),
        uncovered,
    })
}

/// Whether `j` alone contests `i`: the predecessors of `i` are `j` or still
/// reach `j` without `i`, and the successors of `i` are `j` or still
/// reachable from `j` without `i`.
pub fn directly_contests(g: &DirectedGraph, j: NodeId, i: NodeId) -> Result<bool> {
    if i == j {
        return Err(Error::SameEndpoints(g.label(i).to_owned()));
    }
    let mut pred_j = predecessor_set_without(g, j, i);
    pred_j.insert(j);
    let mut succ_j = successor_set_without(g, j, i);
    succ_j.insert(j);
    Ok(predecessor_set(g, i).is_subset(&pred_j) && successor_set(g, i).is_subset(&succ_j))
}

/// Contestability of `i` against every node set not containing it.
///
/// Adding members never shrinks what a set serves, so `i` is contested iff
/// the set of all other nodes contests it. That set serves a pair `(a, b)`
/// exactly when `b` stays reachable from `a` without `i`.
pub fn contestation(g: &DirectedGraph, i: NodeId) -> Contestation {
    if g.role(i) != NodeRole::Intermediary {
        return Contestation::Vacuous;
    }
    let succ = successor_set(g, i);
    let all_served = predecessor_set(g, i).iter().all(|a| {
        let reach = successor_set_without(g, a, i);
        succ.iter().all(|b| b == a || reach.contains(b))
    });
    if all_served {
        Contestation::Contested
    } else {
        Contestation::Uncontested
    }
}

/// True when some node set contests `i`, including the vacuous case.
pub fn is_contested(g: &DirectedGraph, i: NodeId) -> bool {
    contestation(g, i) != Contestation::Uncontested
}

/// All contesting sets of minimum size, in lexicographic node order.
///
/// Returns no sets when `i` is uncontested, and the single empty set when
/// `i` has nothing to contest.
pub fn minimal_contesting_sets(g: &DirectedGraph, i: NodeId) -> Result<Vec<NodeSet>> {
    let n = g.node_count();
    if n > MINIMAL_SEARCH_LIMIT {
        return Err(Error::GuardExceeded {
            operation: "minimal contesting set search",
            nodes: n,
            limit: MINIMAL_SEARCH_LIMIT,
        });
    }
    let pairs: Vec<(NodeId, NodeId)> = coverage(g, i).iter().collect();
    if pairs.is_empty() {
        return Ok(vec![NodeSet::empty(n)]);
    }
    // coverage pairs served by each useful candidate, as a bitmask
    let candidates: Vec<(NodeId, FixedBitSet)> = g
        .nodes()
        .filter(|&j| j != i)
        .filter_map(|j| {
            let service = Service::of(g, j, i);
            let mut served = FixedBitSet::with_capacity(pairs.len());
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if service.serves(a, b) {
                    served.insert(k);
                }
            }
            (!served.is_clear()).then_some((j, served))
        })
        .collect();

    for size in 1..=candidates.len() {
        let found: Vec<NodeSet> = candidates
            .iter()
            .combinations(size)
            .filter(|combo| {
                let mut union = FixedBitSet::with_capacity(pairs.len());
                for (_, served) in combo {
                    union.union_with(served);
                }
                union.is_full()
            })
            .map(|combo| NodeSet::from_ids(n, combo.into_iter().map(|(j, _)| *j)))
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// Result of checking that intermediaries are uncontested exactly when they
/// are middlemen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityReport {
    pub intermediaries_checked: usize,
    pub counterexamples: Vec<NodeId>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn duality_audit(g: &DirectedGraph) -> DualityReport {
    let mut report = DualityReport::default();
    for i in g.nodes().filter(|&i| g.role(i) == NodeRole::Intermediary) {
        report.intermediaries_checked += 1;
        let uncontested = contestation(g, i) == Contestation::Uncontested;
        if uncontested != is_middleman(g, i) {
            report.counterexamples.push(i);
        }
    }
    report
}
