//! Standard centrality indices, for comparison with middleman power.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector, Schur};

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::reach::distances_from;

/// Bonacich attenuation that reproduces the reference table for the
/// undirected layered network.
pub const DEFAULT_BONACICH_BETA: f64 = 0.2;
pub const DEFAULT_DAMPING: f64 = 0.85;
const PAGERANK_TOLERANCE: f64 = 1e-12;
const PAGERANK_MAX_ITERATIONS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    Degree,
    Closeness,
    Betweenness,
    Bonacich,
    PageRank,
    Beta,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Degree,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Bonacich,
        Measure::PageRank,
        Measure::Beta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Bonacich => "bonacich",
            Measure::PageRank => "pagerank",
            Measure::Beta => "beta",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Measure::ALL.iter().map(|m| m.as_str()).collect();
                format!(
                    "unknown measure `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// Scores of one measure for every node, in node order.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
    /// Named numeric parameters the scores depend on.
    pub parameters: Vec<(&'static str, f64)>,
    /// How the scores were scaled.
    pub normalization: &'static str,
}

/// Geodesic betweenness over ordered pairs.
///
/// With `normalized`, scores are divided by (n-1)(n-2) on directed networks
/// and by (n-1)(n-2)/2 on symmetric ones.
pub fn betweenness(g: &DirectedGraph, normalized: bool) -> CentralityVector {
    let n = g.node_count();
    let mut scores = vec![0.0; n];
    // Brandes accumulation, one breadth-first search per source
    for s in g.nodes() {
        let mut order = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist: Vec<Option<usize>> = vec![None; n];
        sigma[s.index()] = 1.0;
        dist[s.index()] = Some(0);
        let mut queue = VecDeque::from([s.index()]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let dv = dist[v].unwrap_or_default();
            for w in g.successors(NodeId::new(v)) {
                let w = w.index();
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
                if dist[w] == Some(dv + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0f64; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s.index() {
                scores[w] += delta[w];
            }
        }
    }

    let normalization = if !normalized {
        "raw"
    } else if g.is_symmetric() {
        "(n-1)(n-2)/2"
    } else {
        "(n-1)(n-2)"
    };
    if normalized && n >= 3 {
        let pairs = ((n - 1) * (n - 2)) as f64;
        let divisor = if g.is_symmetric() { pairs / 2.0 } else { pairs };
        scores.iter_mut().for_each(|x| *x /= divisor);
    }
    CentralityVector {
        measure: Measure::Betweenness,
        scores,
        parameters: Vec::new(),
        normalization,
    }
}

/// Closeness weighted by the share of the network a node reaches:
/// `(r / (n-1)) * (r / total distance)` for `r` reachable nodes.
pub fn closeness(g: &DirectedGraph) -> CentralityVector {
    let n = g.node_count();
    let scores = g
        .nodes()
        .map(|i| {
            let (reached, total) = distances_from(g, i)
                .iter()
                .flatten()
                .filter(|&&d| d > 0)
                .fold((0usize, 0usize), |(r, t), &d| (r + 1, t + d));
            if reached == 0 {
                0.0
            } else {
                let r = reached as f64;
                (r / (n - 1) as f64) * (r / total as f64)
            }
        })
        .collect();
    CentralityVector {
        measure: Measure::Closeness,
        scores,
        parameters: Vec::new(),
        normalization: "reachable-weighted",
    }
}

/// In-degree, out-degree and the number of distinct neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCentrality {
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    /// Distinct neighbours ignoring direction.
    pub total: Vec<usize>,
}

impl DegreeCentrality {
    pub fn as_vector(&self) -> CentralityVector {
        CentralityVector {
            measure: Measure::Degree,
            scores: self.total.iter().map(|&d| d as f64).collect(),
            parameters: Vec::new(),
            normalization: "distinct neighbours",
        }
    }
}

pub fn degree_centrality(g: &DirectedGraph) -> DegreeCentrality {
    let total = g
        .nodes()
        .map(|i| {
            let out = g.successors(i);
            out.len()
                + g.predecessors(i)
                    .iter()
                    .filter(|p| out.binary_search(p).is_err())
                    .count()
        })
        .collect();
    DegreeCentrality {
        in_degree: g.nodes().map(|i| g.in_degree(i)).collect(),
        out_degree: g.nodes().map(|i| g.out_degree(i)).collect(),
        total,
    }
}

fn adjacency(g: &DirectedGraph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut a = DMatrix::zeros(n, n);
    for (i, j) in g.arcs() {
        a[(i.index(), j.index())] = 1.0;
    }
    a
}

/// Largest eigenvalue modulus of the adjacency matrix.
///
/// The Schur iteration runs on `A + I`: the spectrum shifts by one, which
/// breaks the equal-modulus eigenvalues of cycles that stall unshifted QR,
/// and for a nonnegative matrix the largest modulus is the real Perron root.
pub fn spectral_radius(g: &DirectedGraph) -> Result<f64> {
    let n = g.node_count();
    if g.arc_count() == 0 {
        return Ok(0.0);
    }
    let shifted = adjacency(g) + DMatrix::<f64>::identity(n, n);
    let schur = Schur::try_new(shifted, f64::EPSILON, 1000 * n)
        .ok_or(Error::NonConvergent("spectral radius"))?;
    Ok(schur
        .complex_eigenvalues()
        .iter()
        .map(|z| (z - 1.0).norm())
        .fold(0.0, f64::max))
}

/// Bonacich power centrality `alpha (I - beta A)^-1 A 1`, scaled so the
/// squared scores sum to n.
pub fn bonacich(g: &DirectedGraph, beta: f64) -> Result<CentralityVector> {
    let n = g.node_count();
    let radius = spectral_radius(g)?;
    let bound = if radius > 1e-12 {
        1.0 / radius
    } else {
        f64::INFINITY
    };
    if !beta.is_finite() || beta.abs() * radius >= 1.0 - 1e-12 {
        return Err(Error::SpectralBound { beta, bound });
    }
    let a = adjacency(g);
    let rhs = &a * DVector::from_element(n, 1.0);
    let system = DMatrix::identity(n, n) - &a * beta;
    let raw = system
        .lu()
        .solve(&rhs)
        .ok_or(Error::NonConvergent("bonacich linear solve"))?;
    let norm_sq = raw.norm_squared();
    let scores = if norm_sq > 0.0 {
        let alpha = (n as f64 / norm_sq).sqrt();
        raw.iter().map(|x| x * alpha).collect()
    } else {
        vec![0.0; n]
    };
    Ok(CentralityVector {
        measure: Measure::Bonacich,
        scores,
        parameters: vec![("beta", beta), ("spectral_bound", bound)],
        normalization: "sum of squares = n",
    })
}

/// Damped random-surfer PageRank; dangling nodes spread their mass evenly.
pub fn pagerank(g: &DirectedGraph, damping: f64) -> Result<CentralityVector> {
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Error::InvalidDamping(damping));
    }
    let n = g.node_count();
    let mut rank = vec![1.0 / n as f64; n];
    let mut converged = n == 0;
    for _ in 0..PAGERANK_MAX_ITERATIONS {
        if converged {
            break;
        }
        let dangling: f64 = g
            .nodes()
            .filter(|&i| g.out_degree(i) == 0)
            .map(|i| rank[i.index()])
            .sum();
        let base = (1.0 - damping) / n as f64 + damping * dangling / n as f64;
        let mut next = vec![base; n];
        for i in g.nodes() {
            let out = g.out_degree(i);
            if out > 0 {
                let share = damping * rank[i.index()] / out as f64;
                for j in g.successors(i) {
                    next[j.index()] += share;
                }
            }
        }
        let change: f64 = next.iter().zip(&rank).map(|(a, b)| (a - b).abs()).sum();
        rank = next;
        converged = change < PAGERANK_TOLERANCE;
    }
    if !converged {
        return Err(Error::NonConvergent("pagerank"));
    }
    Ok(CentralityVector {
        measure: Measure::PageRank,
        scores: rank,
        parameters: vec![("damping", damping)],
        normalization: "sum = 1",
    })
}

/// Dominance score: each node with predecessors splits one unit evenly
/// among them, and a node collects its shares from its direct successors.
pub fn beta_measure(g: &DirectedGraph) -> CentralityVector {
    let scores = g
        .nodes()
        .map(|i| {
            g.successors(i)
                .iter()
                .map(|&j| 1.0 / g.in_degree(j) as f64)
                .sum()
        })
        .collect();
    CentralityVector {
        measure: Measure::Beta,
        scores,
        parameters: Vec::new(),
        normalization: "raw",
    }
}
