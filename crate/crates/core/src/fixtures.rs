//! Small reference networks with known middlemen, contestability and
//! centrality values.

use crate::graph::DirectedGraph;

/// A named embedded network.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn() -> DirectedGraph,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "fig1",
        description: "7-node acyclic network: strong middleman 6, weak middlemen 2 and 5",
        build: fig1,
    },
    Fixture {
        name: "fig2",
        description: "6-node network without middlemen; {2,3} jointly contest node 4",
        build: fig2,
    },
    Fixture {
        name: "fig4",
        description: "10-node layered network: middlemen 4,5,6 versus contested hubs 7,8",
        build: fig4,
    },
    Fixture {
        name: "star6",
        description: "undirected star, centre 6 with leaves 1-5",
        build: star6,
    },
    Fixture {
        name: "cycle6",
        description: "directed 6-cycle 1->2->...->6->1",
        build: cycle6,
    },
];

pub fn by_name(name: &str) -> Option<DirectedGraph> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .map(|f| (f.build)())
}

fn numbered(n: usize, arcs: &[(usize, usize)]) -> DirectedGraph {
    DirectedGraph::from_index_arcs(n, arcs.iter().map(|&(a, b)| (a - 1, b - 1)))
}

pub fn fig1() -> DirectedGraph {
    numbered(
        7,
        &[
            (1, 2),
            (1, 3),
            (2, 4),
            (2, 5),
            (3, 5),
            (4, 6),
            (5, 6),
            (6, 7),
        ],
    )
}

pub fn fig2() -> DirectedGraph {
    numbered(
        6,
        &[
            (1, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
    )
}

pub fn fig4() -> DirectedGraph {
    numbered(
        10,
        &[
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (4, 8),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (7, 9),
            (7, 10),
            (8, 9),
            (8, 10),
        ],
    )
}

/// `fig4` with every arc reciprocated.
pub fn fig4_undirected() -> DirectedGraph {
    fig4().underlying_undirected()
}

pub fn star6() -> DirectedGraph {
    star(6)
}

pub fn cycle6() -> DirectedGraph {
    cycle(6)
}

/// Undirected star on `n` nodes; node `n` is the centre.
pub fn star(n: usize) -> DirectedGraph {
    assert!(n >= 2, "a star needs at least two nodes");
    let centre = n - 1;
    DirectedGraph::from_index_arcs(
        n,
        (0..centre).flat_map(|leaf| [(leaf, centre), (centre, leaf)]),
    )
}

/// Directed cycle `1 -> 2 -> ... -> n -> 1`.
pub fn cycle(n: usize) -> DirectedGraph {
    assert!(n >= 2, "a cycle needs at least two nodes");
    DirectedGraph::from_index_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete digraph on `n` nodes.
pub fn complete(n: usize) -> DirectedGraph {
    DirectedGraph::from_index_arcs(
        n,
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))),
    )
}
