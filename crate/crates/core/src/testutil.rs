//! Small graph families shared by unit tests.

use crate::graph::Graph;

pub(crate) fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub(crate) fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub(crate) fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub(crate) fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Centers 0 and 1 joined by an edge; 0 carries leaves 2, 3 and 1 carries 4, 5.
pub(crate) fn double_star() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
}
