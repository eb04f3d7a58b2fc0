//! Hypergraphic matroid algorithms.
//!
//! A set of hyperedges `F` is a hyperforest when every nonempty `F' ⊆ F`
//! covers at least `|F'| + 1` vertices (the strong Hall condition). The
//! hyperforests are the independent sets of a matroid, so a hypertree (a
//! hyperforest with `n - 1` edges) can be grown greedily. A hypergraph has a
//! hypertree exactly when it is partition-connected; when it is not,
//! [`deficient_partition`] produces a partition whose border is too small.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{SpanningTree, Vertex};
use crate::matching::saturates_left;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("hyperedge {edge} contains vertex {vertex} outside 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("edge id {0} does not exist")]
    BadEdgeId(usize),
    #[error("edge set is not a hypertree")]
    NotAHypertree,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("no vertex of hyperedge {0} can be dropped while keeping a hypertree")]
    ShrinkStuck(usize),
}

/// Hypergraph on vertices `0..n`. Hyperedges are stored sorted and
/// deduplicated; their ids are their positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError> {
        let mut edges = edges;
        for (id, e) in edges.iter_mut().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(HypergraphError::EmptyHyperedge(id));
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge: id,
                    vertex,
                    n,
                });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &[Vertex] {
        &self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Identifies vertex `b` with `a` (`a < b`); vertices above `b` shift
    /// down by one.
    fn contract(&self, a: Vertex, b: Vertex) -> Hypergraph {
        debug_assert!(a < b && b < self.n);
        let image = |v: Vertex| match v.cmp(&b) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Greater => v - 1,
        };
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e: Vec<Vertex> = e.iter().map(|&v| image(v)).collect();
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        Hypergraph {
            n: self.n - 1,
            edges,
        }
    }
}

/// A partition of `0..n` into nonempty parts. Parts are sorted internally
/// and ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError> {
        let mut parts = parts;
        let mut seen = vec![false; n];
        for part in parts.iter_mut() {
            part.sort_unstable();
            if part.is_empty() {
                return Err(HypergraphError::InvalidPartition("empty part".into()));
            }
            for &v in part.iter() {
                if v >= n || seen[v] {
                    return Err(HypergraphError::InvalidPartition(format!(
                        "vertex {v} is out of range or repeated"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(HypergraphError::InvalidPartition(format!(
                "vertex {v} is uncovered"
            )));
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Ok(Partition { parts })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    fn part_of(&self, n: usize) -> Vec<usize> {
        let mut index = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                index[v] = i;
            }
        }
        index
    }
}

/// A set of hyperedge ids, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hyperforest {
    edge_ids: Vec<usize>,
}

impl Hyperforest {
    pub fn new(mut edge_ids: Vec<usize>) -> Self {
        edge_ids.sort_unstable();
        edge_ids.dedup();
        Hyperforest { edge_ids }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

/// Strong Hall condition on an explicit edge list over `0..n`: for every
/// vertex `v` covered by the edges, the sets `e \ {v}` have a system of
/// distinct representatives.
fn strong_hall(n: usize, edges: &[&[Vertex]]) -> bool {
    if edges.is_empty() {
        return true;
    }
    // Each edge needs two vertices of its own; cheap necessary checks first.
    if edges.iter().any(|e| e.len() < 2) {
        return false;
    }
    let covered: BTreeSet<Vertex> = edges.iter().flat_map(|e| e.iter().copied()).collect();
    if covered.len() < edges.len() + 1 {
        return false;
    }
    covered.iter().all(|&v| {
        let adj: Vec<Vec<usize>> = edges
            .iter()
            .map(|e| e.iter().copied().filter(|&w| w != v).collect())
            .collect();
        saturates_left(&adj, n)
    })
}

/// True iff the hyperedges with ids in `f` satisfy the strong Hall condition.
pub fn is_hyperforest(h: &Hypergraph, f: &[usize]) -> bool {
    let edges: Vec<&[Vertex]> = f.iter().map(|&id| h.edge(id)).collect();
    strong_hall(h.n, &edges)
}

/// Greedy basis of the hypergraphic matroid, scanning edges in id order.
/// Returns it when it is a hypertree (`n - 1` edges), `None` otherwise.
pub fn greedy_hypertree(h: &Hypergraph) -> Option<Hyperforest> {
    let target = h.n.saturating_sub(1);
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    // A rejected edge stays rejected as the forest grows, and so does any
    // later copy of it.
    let mut rejected: BTreeSet<&[Vertex]> = BTreeSet::new();
    for (id, e) in h.edges.iter().enumerate() {
        if chosen.len() == target {
            break;
        }
        if rejected.contains(e.as_slice()) {
            continue;
        }
        chosen.push(id);
        if !is_hyperforest(h, &chosen) {
            chosen.pop();
            rejected.insert(e);
        }
    }
    (chosen.len() == target).then(|| Hyperforest::new(chosen))
}

/// Partition-connectivity, decided through the existence of a hypertree.
pub fn is_partition_connected(h: &Hypergraph) -> bool {
    greedy_hypertree(h).is_some()
}

/// A hypertree shrunk to an ordinary spanning tree on `0..n`, with the
/// originating hyperedge of every tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrunkTree {
    pub tree: SpanningTree,
    /// `(edge id, u, v)` with `{u, v} ⊆ hyperedge`, `u < v`, by edge id.
    pub assignment: Vec<(usize, Vertex, Vertex)>,
}

/// Shrinks every hyperedge of the hypertree `t` to two of its vertices so the
/// result is a spanning tree. Repeatedly takes the lowest-id edge with more
/// than two vertices and drops its lowest vertex whose removal keeps the
/// strong Hall condition.
pub fn shrink_to_tree(h: &Hypergraph, t: &Hyperforest) -> Result<ShrunkTree, HypergraphError> {
    if let Some(&id) = t.edge_ids().iter().find(|&&id| id >= h.edge_count()) {
        return Err(HypergraphError::BadEdgeId(id));
    }
    if h.n == 0 || t.len() != h.n - 1 || !is_hyperforest(h, t.edge_ids()) {
        return Err(HypergraphError::NotAHypertree);
    }
    let mut current: Vec<Vec<Vertex>> =
        t.edge_ids().iter().map(|&id| h.edge(id).to_vec()).collect();
    while let Some(pos) = current.iter().position(|e| e.len() > 2) {
        let original = current[pos].clone();
        let mut shrunk = false;
        for &v in &original {
            current[pos] = original.iter().copied().filter(|&w| w != v).collect();
            let view: Vec<&[Vertex]> = current.iter().map(Vec::as_slice).collect();
            if strong_hall(h.n, &view) {
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return Err(HypergraphError::ShrinkStuck(t.edge_ids()[pos]));
        }
    }
    let assignment: Vec<(usize, Vertex, Vertex)> = t
        .edge_ids()
        .iter()
        .zip(&current)
        .map(|(&id, e)| (id, e[0], e[1]))
        .collect();
    let tree = SpanningTree::new(0..h.n, assignment.iter().map(|&(_, u, v)| (u, v)))
        .map_err(|_| HypergraphError::NotAHypertree)?;
    Ok(ShrunkTree { tree, assignment })
}

/// `δ(P)`: ids of the hyperedges meeting at least two parts.
pub fn border(h: &Hypergraph, p: &Partition) -> Vec<usize> {
    let part = p.part_of(h.n);
    h.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.iter().any(|&v| part[v] != part[e[0]]))
        .map(|(id, _)| id)
        .collect()
}

/// A partition `P` with `|δ(P)| ≤ |P| - 2`, or `None` when `h` is
/// partition-connected.
///
/// Pairs of vertices are contracted (scanning pairs in lexicographic order)
/// while the contraction stays non-partition-connected. At the fixpoint only
/// the all-singletons partition of the contracted hypergraph can be
/// deficient, and its parts pulled back to `h` are the certificate.
pub fn deficient_partition(h: &Hypergraph) -> Option<Partition> {
    if is_partition_connected(h) {
        return None;
    }
    // class[v] = vertex of `current` that original vertex v was merged into.
    let mut class: Vec<Vertex> = (0..h.n).collect();
    let mut current = h.clone();
    'rounds: loop {
        for a in 0..current.n {
            for b in a + 1..current.n {
                let merged = current.contract(a, b);
                if !is_partition_connected(&merged) {
                    for c in class.iter_mut() {
                        *c = match (*c).cmp(&b) {
                            std::cmp::Ordering::Less => *c,
                            std::cmp::Ordering::Equal => a,
                            std::cmp::Ordering::Greater => *c - 1,
                        };
                    }
                    current = merged;
                    continue 'rounds;
                }
            }
        }
        break;
    }
    let mut parts = vec![Vec::new(); current.n];
    for (v, &c) in class.iter().enumerate() {
        parts[c].push(v);
    }
    let partition = Partition::new(h.n, parts).expect("contraction classes partition the vertices");
    debug_assert!(border(h, &partition).len() + 2 <= partition.len());
    Some(partition)
}
