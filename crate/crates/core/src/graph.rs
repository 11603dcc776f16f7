//! Immutable node-labelled directed graphs.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::NodeSet;

/// Dense index of a node inside one [`DirectedGraph`].
///
/// Ids follow the graph's input node order. They are only meaningful for
/// the graph that produced them; [`DirectedGraph::remove_node`] renumbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(usize);

impl NodeId {
    pub const fn new(index: usize) -> Self {
        NodeId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Position of a node relative to the flow of the network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeRole {
    Source,
    Sink,
    Intermediary,
    Isolated,
}

impl NodeRole {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeRole::Source => "source",
            NodeRole::Sink => "sink",
            NodeRole::Intermediary => "intermediary",
            NodeRole::Isolated => "isolated",
        }
    }
}

/// Direct successors and predecessors of a node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    pub succ: NodeSet,
    pub pred: NodeSet,
    pub out_degree: usize,
    pub in_degree: usize,
}

/// A directed network without self-loops or parallel arcs.
///
/// Isolated nodes are allowed. Adjacency lists are kept sorted by id so
/// every traversal is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    succ: Vec<Vec<NodeId>>,
    pred: Vec<Vec<NodeId>>,
    arc_count: usize,
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<(&str, &str)> = self
            .arcs()
            .map(|(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("DirectedGraph")
            .field("nodes", &self.labels)
            .field("arcs", &arcs)
            .finish()
    }
}

/// Incremental construction of a [`DirectedGraph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    succ: Vec<Vec<NodeId>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, adding the node if it is new.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.succ.push(Vec::new());
        id
    }

    /// Adds arc `from -> to`, creating missing endpoints. Duplicates collapse.
    pub fn add_arc(&mut self, from: &str, to: &str) -> Result<()> {
        if from == to {
            return Err(Error::SelfLoop {
                line: 0,
                label: from.to_owned(),
            });
        }
        let a = self.add_node(from);
        let b = self.add_node(to);
        self.succ[a.0].push(b);
        Ok(())
    }

    pub fn build(self) -> DirectedGraph {
        let n = self.labels.len();
        let mut succ = self.succ;
        let mut pred = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (a, out) in succ.iter_mut().enumerate() {
            out.sort_unstable();
            out.dedup();
            arc_count += out.len();
            for &b in out.iter() {
                pred[b.0].push(NodeId(a));
            }
        }
        DirectedGraph {
            labels: self.labels,
            index: self.index,
            succ,
            pred,
            arc_count,
        }
    }
}

impl DirectedGraph {
    /// Builds a graph from an explicit node list and labelled arcs.
    ///
    /// Node order is `nodes` followed by any arc endpoint not listed there.
    pub fn from_arcs<S: AsRef<str>>(nodes: &[S], arcs: &[(S, S)]) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for label in nodes {
            let label = label.as_ref();
            if builder.index.contains_key(label) {
                return Err(Error::DuplicateLabel(label.to_owned()));
            }
            builder.add_node(label);
        }
        for (a, b) in arcs {
            builder.add_arc(a.as_ref(), b.as_ref())?;
        }
        Ok(builder.build())
    }

    /// Graph on nodes `0..n` (labelled `"1".."n"`) with arcs given by index.
    pub fn from_index_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut builder = GraphBuilder::new();
        for i in 1..=n {
            builder.add_node(&i.to_string());
        }
        for (a, b) in arcs {
            assert!(
                a != b && a < n && b < n,
                "invalid arc ({a}, {b}) for n = {n}"
            );
            builder.succ[a].push(NodeId(b));
        }
        builder.build()
    }

    /// Parses `source,target` lines. `#` starts a comment line; blank lines
    /// are skipped. Nodes are numbered in order of first appearance.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `source,target`, found {} field(s)", fields.len()),
                });
            }
            if fields.iter().any(|f| f.is_empty()) {
                return Err(Error::Parse {
                    line: line_no,
                    message: "empty node label".to_owned(),
                });
            }
            builder.add_arc(fields[0], fields[1]).map_err(|e| match e {
                Error::SelfLoop { label, .. } => Error::SelfLoop {
                    line: line_no,
                    label,
                },
                other => other,
            })?;
        }
        Ok(builder.build())
    }

    /// Builds a graph from a square 0/1 adjacency matrix. Row `i`, column
    /// `j` set means arc `i -> j`. Labels default to `"1".."n"`.
    pub fn from_adjacency_matrix(matrix: &[Vec<u8>], labels: Option<&[String]>) -> Result<Self> {
        let n = matrix.len();
        for (row, entries) in matrix.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row: row + 1,
                    found: entries.len(),
                    expected: n,
                });
            }
        }
        let labels: Vec<String> = match labels {
            Some(given) if given.len() != n => {
                return Err(Error::LabelCount {
                    expected: n,
                    found: given.len(),
                })
            }
            Some(given) => given.to_vec(),
            None => (1..=n).map(|i| i.to_string()).collect(),
        };
        let mut builder = GraphBuilder::new();
        for label in &labels {
            if builder.index.contains_key(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            builder.add_node(label);
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                match entry {
                    0 => {}
                    1 if i == j => return Err(Error::NonzeroDiagonal { index: i + 1 }),
                    1 => builder.succ[i].push(NodeId(j)),
                    other => {
                        return Err(Error::InvalidEntry {
                            row: i + 1,
                            col: j + 1,
                            value: other.to_string(),
                        })
                    }
                }
            }
        }
        Ok(builder.build())
    }

    /// Parses `n` lines of `n` whitespace- or comma-separated 0/1 tokens.
    pub fn parse_adjacency_matrix(text: &str, labels: Option<&[String]>) -> Result<Self> {
        let mut matrix = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row_no = matrix.len() + 1;
            let row = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .enumerate()
                .map(|(col, token)| match token {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    other => Err(Error::InvalidEntry {
                        row: row_no,
                        col: col + 1,
                        value: other.to_owned(),
                    }),
                })
                .collect::<Result<Vec<u8>>>()?;
            matrix.push(row);
        }
        Self::from_adjacency_matrix(&matrix, labels)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id.0]
    }

    /// Looks up a node by label.
    pub fn node(&self, label: &str) -> Result<NodeId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownNode(label.to_owned()))
    }

    /// Labels of a node set, in node order.
    pub fn set_labels(&self, set: &NodeSet) -> Vec<&str> {
        set.iter().map(|id| self.label(id)).collect()
    }

    /// Node set from labels; panics on unknown labels (test and fixture helper).
    pub fn set_of(&self, labels: &[&str]) -> NodeSet {
        NodeSet::from_ids(
            self.node_count(),
            labels
                .iter()
                .map(|l| self.node(l).unwrap_or_else(|e| panic!("{e}"))),
        )
    }

    pub fn successors(&self, id: NodeId) -> &[NodeId] {
        &self.succ[id.0]
    }

    pub fn predecessors(&self, id: NodeId) -> &[NodeId] {
        &self.pred[id.0]
    }

    pub fn out_degree(&self, id: NodeId) -> usize {
        self.succ[id.0].len()
    }

    pub fn in_degree(&self, id: NodeId) -> usize {
        self.pred[id.0].len()
    }

    pub fn has_arc(&self, from: NodeId, to: NodeId) -> bool {
        self.succ[from.0].binary_search(&to).is_ok()
    }

    /// All arcs in (source id, target id) order.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, out)| out.iter().map(move |&b| (NodeId(a), b)))
    }

    pub fn neighborhood(&self, id: NodeId) -> Neighborhood {
        let n = self.node_count();
        Neighborhood {
            succ: NodeSet::from_ids(n, self.succ[id.0].iter().copied()),
            pred: NodeSet::from_ids(n, self.pred[id.0].iter().copied()),
            out_degree: self.out_degree(id),
            in_degree: self.in_degree(id),
        }
    }

    pub fn role(&self, id: NodeId) -> NodeRole {
        match (self.in_degree(id) > 0, self.out_degree(id) > 0) {
            (false, true) => NodeRole::Source,
            (true, false) => NodeRole::Sink,
            (true, true) => NodeRole::Intermediary,
            (false, false) => NodeRole::Isolated,
        }
    }

    /// The network with `id` and all its arcs deleted. Remaining nodes keep
    /// their labels and relative order.
    pub fn remove_node(&self, id: NodeId) -> DirectedGraph {
        let mut builder = GraphBuilder::new();
        for v in self.nodes().filter(|&v| v != id) {
            builder.add_node(self.label(v));
        }
        for (a, b) in self.arcs().filter(|&(a, b)| a != id && b != id) {
            let a = builder.index[self.label(a)];
            let b = builder.index[self.label(b)];
            builder.succ[a.0].push(b);
        }
        builder.build()
    }

    /// The network with every arc reciprocated.
    pub fn underlying_undirected(&self) -> DirectedGraph {
        let mut builder = GraphBuilder::new();
        for label in &self.labels {
            builder.add_node(label);
        }
        for (a, b) in self.arcs() {
            builder.succ[a.0].push(b);
            builder.succ[b.0].push(a);
        }
        builder.build()
    }

    /// Whether every arc is reciprocated.
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(a, b)| self.has_arc(b, a))
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.node_count();
        let mut rows = vec![vec![0u8; n]; n];
        for (a, b) in self.arcs() {
            rows[a.0][b.0] = 1;
        }
        rows
    }
}
