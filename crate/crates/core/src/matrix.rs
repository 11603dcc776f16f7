//! Adjacency-matrix route to middleman power and classification.
//!
//! Reachability comes from the union of boolean matrix powers with the
//! diagonal cleared, once for the whole network and once per node with that
//! node's row and column zeroed. This path shares no code with the
//! traversal-based functions in [`crate::middleman`], so the two can be
//! checked against each other.

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::graph::DirectedGraph;
use crate::middleman::MiddlemanClass;

#[derive(Clone, Debug, PartialEq, Eq)]
struct BoolMatrix {
    rows: Vec<FixedBitSet>,
}

impl BoolMatrix {
    fn zeros(n: usize) -> Self {
        BoolMatrix {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    fn adjacency(g: &DirectedGraph) -> Self {
        let mut m = Self::zeros(g.node_count());
        for (a, b) in g.arcs() {
            m.rows[a.index()].insert(b.index());
        }
        m
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.rows[j].insert(i);
            }
        }
        t
    }

    /// Symmetrised pattern `self | selfᵀ`.
    fn symmetrised(&self) -> Self {
        let mut s = self.transpose();
        for (row, own) in s.rows.iter_mut().zip(&self.rows) {
            row.union_with(own);
        }
        s
    }

    fn multiply(&self, rhs: &BoolMatrix) -> BoolMatrix {
        let n = self.len();
        let mut out = Self::zeros(n);
        for (i, row) in self.rows.iter().enumerate() {
            let target = &mut out.rows[i];
            for k in row.ones() {
                target.union_with(&rhs.rows[k]);
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(FixedBitSet::is_clear)
    }

    /// Copy with row and column `i` cleared.
    fn without_node(&self, i: usize) -> BoolMatrix {
        let mut m = self.clone();
        m.rows[i].clear();
        for row in &mut m.rows {
            row.set(i, false);
        }
        m
    }

    /// Union of `self^1 ..= self^n` with the diagonal cleared.
    fn closure(&self) -> BoolMatrix {
        let n = self.len();
        let mut reach = self.clone();
        let mut power = self.clone();
        for _ in 2..=n {
            power = power.multiply(self);
            if power.is_zero() {
                break;
            }
            let mut grew = false;
            for (acc, row) in reach.rows.iter_mut().zip(&power.rows) {
                if !row.is_subset(acc) {
                    acc.union_with(row);
                    grew = true;
                }
            }
            // once a power adds nothing new, no later power can either
            if !grew {
                break;
            }
        }
        for (i, row) in reach.rows.iter_mut().enumerate() {
            row.set(i, false);
        }
        reach
    }

    fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.count_ones(..) as u64).collect()
    }
}

/// Raw and normalised middleman power for every node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerVectors {
    /// Brokerage b_i, in node order.
    pub raw: Vec<u64>,
    /// ν_i = raw / normalizer.
    pub normalized: Vec<Ratio<u64>>,
    /// B = max(B', 1).
    pub normalizer: u64,
}

/// Brokerage from total reach lost when each node is deleted, minus the
/// node's own successors and predecessors.
fn removal_power(adjacency: &BoolMatrix, successors: &[u64], predecessors: &[u64]) -> Vec<u64> {
    let total: u64 = successors.iter().sum();
    (0..adjacency.len())
        .into_par_iter()
        .map(|i| {
            let remaining: u64 = adjacency.without_node(i).closure().row_sums().iter().sum();
            let lost = total - remaining;
            let own = successors[i] + predecessors[i];
            debug_assert!(lost >= own);
            lost - own
        })
        .collect()
}

/// Middleman power of every node from matrix powers.
pub fn power_all(g: &DirectedGraph) -> PowerVectors {
    let d = BoolMatrix::adjacency(g);
    let successors = d.closure().row_sums();
    let predecessors = d.transpose().closure().row_sums();
    let out_degree = d.row_sums();

    let b_prime: u64 = successors
        .iter()
        .zip(&out_degree)
        .map(|(s, out)| s - out)
        .sum();
    let normalizer = b_prime.max(1);

    let raw = removal_power(&d, &successors, &predecessors);
    let normalized = raw.iter().map(|&b| Ratio::new(b, normalizer)).collect();
    PowerVectors {
        raw,
        normalized,
        normalizer,
    }
}

/// Raw power of every node in the underlying undirected network.
pub fn undirected_power(g: &DirectedGraph) -> Vec<u64> {
    let u = BoolMatrix::adjacency(g).symmetrised();
    let reach = u.closure().row_sums();
    // symmetric: predecessor counts equal successor counts
    removal_power(&u, &reach, &reach)
}

/// Classifies every node by comparing its power in the network with its
/// power in the underlying undirected network: positive in both means a
/// strong middleman, positive only in the directed network a weak one.
pub fn classify_all(g: &DirectedGraph) -> Vec<MiddlemanClass> {
    let directed = power_all(g).raw;
    let undirected = undirected_power(g);
    directed
        .iter()
        .zip(&undirected)
        .map(|(&np, &npu)| match (np > 0, npu > 0) {
            (true, true) => MiddlemanClass::StrongMiddleman,
            (true, false) => MiddlemanClass::WeakMiddleman,
            (false, _) => MiddlemanClass::NonMiddleman,
        })
        .collect()
}
