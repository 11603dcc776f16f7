//! Reachability, connectivity and shortest paths.
//!
//! A walk has at least one arc, and successor/predecessor sets never contain
//! the node itself, even when it lies on a cycle.

use std::collections::VecDeque;

use crate::graph::{DirectedGraph, NodeId};
use crate::set::{NodeSet, PairSet};

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Backward,
}

fn search(g: &DirectedGraph, start: NodeId, dir: Direction, avoid: Option<NodeId>) -> NodeSet {
    let n = g.node_count();
    let mut seen = NodeSet::empty(n);
    if avoid == Some(start) {
        return seen;
    }
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let next = match dir {
            Direction::Forward => g.successors(v),
            Direction::Backward => g.predecessors(v),
        };
        for &w in next {
            if Some(w) != avoid && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.remove(start);
    seen
}

/// All nodes reachable from `i` by a walk, excluding `i`.
pub fn successor_set(g: &DirectedGraph, i: NodeId) -> NodeSet {
    search(g, i, Direction::Forward, None)
}

/// All nodes with a walk to `i`, excluding `i`.
pub fn predecessor_set(g: &DirectedGraph, i: NodeId) -> NodeSet {
    search(g, i, Direction::Backward, None)
}

/// Successor set of `i` in the network with `removed` deleted.
pub fn successor_set_without(g: &DirectedGraph, i: NodeId, removed: NodeId) -> NodeSet {
    search(g, i, Direction::Forward, Some(removed))
}

/// Predecessor set of `i` in the network with `removed` deleted.
pub fn predecessor_set_without(g: &DirectedGraph, i: NodeId, removed: NodeId) -> NodeSet {
    search(g, i, Direction::Backward, Some(removed))
}

/// Successor sets of every node, optionally with one node deleted (its own
/// entry is then empty).
pub fn all_successor_sets(g: &DirectedGraph, removed: Option<NodeId>) -> Vec<NodeSet> {
    g.nodes()
        .map(|v| search(g, v, Direction::Forward, removed))
        .collect()
}

/// Weakly connected components, each sorted by node order, listed by their
/// first node.
pub fn weakly_connected_components(g: &DirectedGraph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let mut seen = NodeSet::empty(n);
    let mut components = Vec::new();
    for root in g.nodes() {
        if !seen.insert(root) {
            continue;
        }
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in g.successors(v).iter().chain(g.predecessors(v)) {
                if seen.insert(w) {
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Number of weakly connected components.
pub fn component_count(g: &DirectedGraph) -> usize {
    weakly_connected_components(g).len()
}

pub fn is_weakly_connected(g: &DirectedGraph) -> bool {
    component_count(g) <= 1
}

/// True iff every ordered pair of distinct nodes is joined by a walk.
pub fn is_strongly_connected(g: &DirectedGraph) -> bool {
    let n = g.node_count();
    if n <= 1 {
        return true;
    }
    let root = NodeId::new(0);
    successor_set(g, root).len() == n - 1 && predecessor_set(g, root).len() == n - 1
}

/// Breadth-first distances from `source`; `None` marks unreachable nodes.
pub fn distances_from(g: &DirectedGraph, source: NodeId) -> Vec<Option<usize>> {
    bfs(g, source, Direction::Forward).0
}

/// Breadth-first distances to `target`; `None` marks nodes that cannot reach it.
pub fn distances_to(g: &DirectedGraph, target: NodeId) -> Vec<Option<usize>> {
    bfs(g, target, Direction::Backward).0
}

fn bfs(g: &DirectedGraph, source: NodeId, dir: Direction) -> (Vec<Option<usize>>, Vec<u64>) {
    let n = g.node_count();
    let mut dist = vec![None; n];
    let mut sigma = vec![0u64; n];
    dist[source.index()] = Some(0);
    sigma[source.index()] = 1;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v.index()].unwrap_or_default();
        let next = match dir {
            Direction::Forward => g.successors(v),
            Direction::Backward => g.predecessors(v),
        };
        for &w in next {
            match dist[w.index()] {
                None => {
                    dist[w.index()] = Some(dv + 1);
                    sigma[w.index()] = sigma[v.index()];
                    queue.push_back(w);
                }
                Some(dw) if dw == dv + 1 => sigma[w.index()] += sigma[v.index()],
                Some(_) => {}
            }
        }
    }
    (dist, sigma)
}

/// Length in arcs of a shortest walk from `i` to `j`; `None` if unreachable.
pub fn geodesic_distance(g: &DirectedGraph, i: NodeId, j: NodeId) -> Option<usize> {
    distances_from(g, i)[j.index()]
}

/// Shortest-path counts between an ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCounts {
    /// Number of geodesics from `h` to `j`.
    pub total: u64,
    /// Geodesics passing through each interior node, in node order; only
    /// nodes with a nonzero count appear.
    pub through: Vec<(NodeId, u64)>,
}

/// Counts geodesics from `h` to `j` and, per interior node, those through it.
pub fn geodesic_counts(g: &DirectedGraph, h: NodeId, j: NodeId) -> GeodesicCounts {
    let (dist_from, sigma_from) = bfs(g, h, Direction::Forward);
    let Some(length) = dist_from[j.index()] else {
        return GeodesicCounts {
            total: 0,
            through: Vec::new(),
        };
    };
    let (dist_to, sigma_to) = bfs(g, j, Direction::Backward);
    let through = g
        .nodes()
        .filter(|&v| v != h && v != j)
        .filter_map(|v| match (dist_from[v.index()], dist_to[v.index()]) {
            (Some(a), Some(b)) if a + b == length => {
                Some((v, sigma_from[v.index()] * sigma_to[v.index()]))
            }
            _ => None,
        })
        .collect();
    GeodesicCounts {
        total: sigma_from[j.index()],
        through,
    }
}

/// Ordered pairs `(a, b)` with `a` in P_i and `b` in S_i, excluding `a == b`.
///
/// Diagonal pairs only arise on cycles through `i` and never involve three
/// distinct nodes, so they are not part of what `i` intermediates.
pub fn coverage(g: &DirectedGraph, i: NodeId) -> PairSet {
    let pred = predecessor_set(g, i);
    let succ = successor_set(g, i);
    pred.iter()
        .flat_map(|a| succ.iter().filter(move |&b| b != a).map(move |b| (a, b)))
        .collect()
}

/// Pairs `(i, j)` for every `j` reachable from `i`.
pub fn reach_pairs(g: &DirectedGraph, i: NodeId) -> PairSet {
    successor_set(g, i).iter().map(|j| (i, j)).collect()
}

/// Local clustering coefficient of `i` on the underlying undirected network.
/// Nodes with fewer than two neighbours score 0.
pub fn local_clustering(g: &DirectedGraph, i: NodeId) -> f64 {
    let mut neighbours = NodeSet::empty(g.node_count());
    for &v in g.successors(i).iter().chain(g.predecessors(i)) {
        neighbours.insert(v);
    }
    let k = neighbours.len();
    if k < 2 {
        return 0.0;
    }
    let members = neighbours.to_vec();
    let mut links = 0usize;
    for (x, &a) in members.iter().enumerate() {
        for &b in &members[x + 1..] {
            if g.has_arc(a, b) || g.has_arc(b, a) {
                links += 1;
            }
        }
    }
    links as f64 / (k * (k - 1) / 2) as f64
}
