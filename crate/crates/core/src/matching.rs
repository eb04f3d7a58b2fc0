//! Maximum bipartite matching by augmenting paths, plus the Hall-condition
//! helpers built on it.

use crate::graph::{BipartiteSubgraph, Side, Vertex};

/// Vertex-disjoint `(x, y)` pairs of a bipartite graph, in host labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner_of_x(&self, x: Vertex) -> Option<Vertex> {
        self.pairs.iter().find(|p| p.0 == x).map(|p| p.1)
    }
}

/// Maximum matching between left vertices `0..adj.len()` and right vertices
/// `0..right`, where `adj[i]` lists the right neighbors of left vertex `i`.
/// Left vertices are augmented in ascending order, neighbors scanned in list
/// order, so the result is deterministic. Returns `mate[left] = right`.
pub(crate) fn max_matching_local(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let mut left_mate = vec![None; adj.len()];
    let mut right_mate: Vec<Option<usize>> = vec![None; right];
    let mut visited = vec![0usize; right];
    let mut stamp = 0;
    for start in 0..adj.len() {
        stamp += 1;
        augment(
            start,
            adj,
            &mut left_mate,
            &mut right_mate,
            &mut visited,
            stamp,
        );
    }
    left_mate
}

/// True iff some matching covers every left vertex. Stops at the first left
/// vertex without an augmenting path.
pub(crate) fn saturates_left(adj: &[Vec<usize>], right: usize) -> bool {
    if adj.len() > right {
        return false;
    }
    let mut left_mate = vec![None; adj.len()];
    let mut right_mate: Vec<Option<usize>> = vec![None; right];
    let mut visited = vec![0usize; right];
    for start in 0..adj.len() {
        if !augment(
            start,
            adj,
            &mut left_mate,
            &mut right_mate,
            &mut visited,
            start + 1,
        ) {
            return false;
        }
    }
    true
}

fn augment(
    start: usize,
    adj: &[Vec<usize>],
    left_mate: &mut [Option<usize>],
    right_mate: &mut [Option<usize>],
    visited: &mut [usize],
    stamp: usize,
) -> bool {
    // Iterative DFS over alternating paths: frames are (left vertex, next
    // neighbor position).
    let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
        if *pos >= adj[u].len() {
            stack.pop();
            via.pop();
            continue;
        }
        let r = adj[u][*pos];
        *pos += 1;
        if visited[r] == stamp {
            continue;
        }
        visited[r] = stamp;
        match right_mate[r] {
            None => {
                // Flip the path: stack[i] is matched to via[i], last to r.
                via.push(r);
                for (&(l, _), &rr) in stack.iter().zip(via.iter()) {
                    left_mate[l] = Some(rr);
                    right_mate[rr] = Some(l);
                }
                return true;
            }
            Some(next) => {
                via.push(r);
                stack.push((next, 0));
            }
        }
    }
    false
}

pub fn max_matching(b: &BipartiteSubgraph) -> Matching {
    let adj: Vec<Vec<usize>> = (0..b.x().len())
        .map(|i| b.x_neighbors(i).to_vec())
        .collect();
    let mate = max_matching_local(&adj, b.y().len());
    let pairs = mate
        .iter()
        .enumerate()
        .filter_map(|(i, m)| m.map(|j| (b.x()[i], b.y()[j])))
        .collect();
    Matching { pairs }
}

/// A matching covering every vertex of `side`, if one exists.
pub fn saturating_matching(b: &BipartiteSubgraph, side: Side) -> Option<Matching> {
    let m = max_matching(b);
    (m.len() == b.side(side).len()).then_some(m)
}
