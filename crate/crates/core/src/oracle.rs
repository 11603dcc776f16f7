//! Brute-force reference implementations for small networks.
//!
//! Everything here works from explicit simple-path enumeration and subset
//! search, using only the raw adjacency lists. None of it calls into the
//! reachability, middleman or contestability modules it is used to check.
//!
//! Simple paths are enough to stand in for walks: every walk from `i` to
//! `j` contains a simple path from `i` to `j` using a subset of its nodes,
//! so the nodes common to all walks are exactly the nodes common to all
//! simple paths, and a pair is connected by a walk iff it is connected by a
//! simple path.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::set::NodeSet;

/// Largest network for path enumeration.
pub const PATH_LIMIT: usize = 12;
/// Largest network for the exhaustive subset search.
pub const SUBSET_LIMIT: usize = 10;

fn guard(g: &DirectedGraph, operation: &'static str, limit: usize) -> Result<()> {
    if g.node_count() > limit {
        Err(Error::GuardExceeded {
            operation,
            nodes: g.node_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Simple paths from one node to another, each listed start to end.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSet {
    pub paths: Vec<Vec<NodeId>>,
}

impl PathSet {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// All simple paths from `i` to `j`, in depth-first order over sorted
/// adjacency lists.
pub fn enumerate_simple_paths(g: &DirectedGraph, i: NodeId, j: NodeId) -> Result<PathSet> {
    guard(g, "simple path enumeration", PATH_LIMIT)?;
    if i == j {
        return Err(Error::SameEndpoints(g.label(i).to_owned()));
    }
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    let mut path = vec![i];
    on_path[i.index()] = true;
    extend(g, j, &mut path, &mut on_path, &mut paths);
    Ok(PathSet { paths })
}

fn extend(
    g: &DirectedGraph,
    target: NodeId,
    path: &mut Vec<NodeId>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<NodeId>>,
) {
    let last = *path.last().expect("path starts non-empty");
    for &next in g.successors(last) {
        if on_path[next.index()] {
            continue;
        }
        path.push(next);
        if next == target {
            out.push(path.clone());
        } else {
            on_path[next.index()] = true;
            extend(g, target, path, on_path, out);
            on_path[next.index()] = false;
        }
        path.pop();
    }
}

/// Interior nodes shared by every simple path from `i` to `j`; empty when
/// there is no path.
pub fn middleman_set_oracle(g: &DirectedGraph, i: NodeId, j: NodeId) -> Result<NodeSet> {
    let paths = enumerate_simple_paths(g, i, j)?;
    let n = g.node_count();
    let mut common = match paths.paths.first() {
        Some(first) => NodeSet::from_ids(n, first.iter().copied()),
        None => return Ok(NodeSet::empty(n)),
    };
    for path in &paths.paths[1..] {
        common.intersect_with(&NodeSet::from_ids(n, path.iter().copied()));
    }
    common.remove(i);
    common.remove(j);
    Ok(common)
}

/// Number of ordered pairs whose every path runs through `h`.
pub fn brokerage_oracle(g: &DirectedGraph, h: NodeId) -> Result<u64> {
    guard(g, "brokerage oracle", PATH_LIMIT)?;
    let mut count = 0;
    for a in g.nodes() {
        for b in g.nodes().filter(|&b| b != a) {
            if middleman_set_oracle(g, a, b)?.contains(h) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Nodes reachable from `start` along simple paths avoiding `removed`.
fn reachable(g: &DirectedGraph, start: NodeId, removed: Option<NodeId>) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.successors(v) {
            if Some(w) != removed && !seen[w.index()] {
                seen[w.index()] = true;
                stack.push(w);
            }
        }
    }
    seen[start.index()] = false;
    seen
}

/// Whether any set of other nodes contests `i`, by trying every subset.
///
/// The pairs to serve are `(a, b)` with `a` reaching `i`, `i` reaching `b`
/// and `a != b`. A member `c` serves `(a, b)` when, with `i` deleted, `a`
/// is `c` or reaches `c`, and `c` reaches `b`.
pub fn contesting_oracle(g: &DirectedGraph, i: NodeId) -> Result<bool> {
    guard(g, "contesting oracle", SUBSET_LIMIT)?;
    let reach: Vec<Vec<bool>> = g.nodes().map(|v| reachable(g, v, None)).collect();
    let reach_without: Vec<Vec<bool>> = g.nodes().map(|v| reachable(g, v, Some(i))).collect();

    let mut pairs = Vec::new();
    for a in g.nodes().filter(|&a| a != i && reach[a.index()][i.index()]) {
        for b in g
            .nodes()
            .filter(|&b| b != a && b != i && reach[i.index()][b.index()])
        {
            pairs.push((a, b));
        }
    }
    let others: Vec<NodeId> = g.nodes().filter(|&v| v != i).collect();
    let serves = |c: NodeId, (a, b): (NodeId, NodeId)| {
        (a == c || reach_without[a.index()][c.index()]) && reach_without[c.index()][b.index()]
    };
    for mask in 0u32..(1u32 << others.len()) {
        let members: Vec<NodeId> = others
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &c)| c)
            .collect();
        if pairs
            .iter()
            .all(|&pair| members.iter().any(|&c| serves(c, pair)))
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Random digraph where each ordered pair of distinct nodes is an arc with
/// probability `p`. The same seed always gives the same graph.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<DirectedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.random_bool(p) {
                arcs.push((a, b));
            }
        }
    }
    Ok(DirectedGraph::from_index_arcs(n, arcs))
}
