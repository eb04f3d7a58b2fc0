use std::collections::BTreeSet;

use crate::graph::{dfs_leaf_independent_set, dfs_tree, is_connected, Graph, SpanningTree, Vertex};

use super::certificate::{find_sl, verify_certificate, SLCertificate};
use super::lift::lift_solution;
use super::KernelError;

/// One application of the reduction: `S ∪ L` is replaced by a vertex `v_S`
/// adjacent to `N(S) \ L` and a pendant vertex `v_L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRecord {
    /// Vertex sets in pre-surgery ids.
    pub s: Vec<Vertex>,
    pub l: Vec<Vertex>,
    pub pre_vertex_count: usize,
    /// New ids of the added vertices.
    pub v_s: Vertex,
    pub v_l: Vertex,
    /// `N(S) \ L` in pre-surgery ids.
    pub neighbor_map: Vec<Vertex>,
    /// Pre-surgery id to post-surgery id; `None` for removed vertices.
    pub index_map: Vec<Option<Vertex>>,
    pub bsl_tree: SpanningTree,
    pub pre_promotion_tree: SpanningTree,
    /// The drop in the parameter; see [`parameter_drop`].
    pub delta_k: i64,
}

impl ReductionRecord {
    pub fn certificate(&self) -> SLCertificate {
        SLCertificate {
            s: self.s.clone(),
            l: self.l.clone(),
            pre_promotion_tree: self.pre_promotion_tree.clone(),
            tree: self.bsl_tree.clone(),
            promotions: 0,
        }
    }

    /// Inverse of `index_map` for vertices that survived.
    pub fn old_id(&self, new: Vertex) -> Option<Vertex> {
        self.index_map.iter().position(|&m| m == Some(new))
    }
}

/// The graph produced by replacing `S ∪ L`, with the bookkeeping needed to
/// undo it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    pub graph: Graph,
    pub index_map: Vec<Option<Vertex>>,
    pub v_s: Vertex,
    pub v_l: Vertex,
    pub neighbor_map: Vec<Vertex>,
}

/// Removes `S ∪ L`, renumbers the survivors in ascending order, then appends
/// `v_S` (adjacent to `N(S) \ L`) and `v_L` (adjacent to `v_S` only).
pub fn surgery(g: &Graph, s: &[Vertex], l: &[Vertex]) -> Result<Surgery, KernelError> {
    let removed: BTreeSet<Vertex> = s.iter().chain(l).copied().collect();
    if removed.len() != s.len() + l.len() || removed.iter().any(|&v| v >= g.n()) {
        return Err(KernelError::Precondition(
            "S and L must be disjoint vertex sets".into(),
        ));
    }
    let mut index_map = vec![None; g.n()];
    let mut next = 0;
    for (v, slot) in index_map.iter_mut().enumerate() {
        if !removed.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let (v_s, v_l) = (next, next + 1);
    let l_set: BTreeSet<Vertex> = l.iter().copied().collect();
    let neighbor_map: Vec<Vertex> = g
        .neighborhood_of_set(s)
        .into_iter()
        .filter(|v| !l_set.contains(v))
        .collect();
    let kept = g
        .edges()
        .filter_map(|(u, v)| Some((index_map[u]?, index_map[v]?)));
    let attached: Vec<(Vertex, Vertex)> = neighbor_map
        .iter()
        .map(|&u| index_map[u].map(|nu| (nu, v_s)))
        .collect::<Option<_>>()
        .ok_or_else(|| KernelError::Precondition("N(S) \\ L meets S".into()))?;
    let graph = Graph::new(next + 2, kept.chain(attached).chain([(v_s, v_l)]))?;
    Ok(Surgery {
        graph,
        index_map,
        v_s,
        v_l,
        neighbor_map,
    })
}

/// Drop in `k` when `S ∪ L` is replaced: `2|S| - 2`, since `S` and `|S| - 1`
/// vertices of `L` become the single internal vertex `v_S`.
///
/// When `S ∪ L` is the whole graph, `v_S` has no neighbor besides `v_L` and
/// is a leaf of every spanning tree of the reduced graph, which then has
/// optimum 0 while the original has optimum exactly `2|S| - 1`. The drop is
/// one larger in that case so the two instances stay equivalent.
pub fn parameter_drop(s_len: usize, neighbor_map_empty: bool) -> i64 {
    2 * s_len as i64 - 2 + i64::from(neighbor_map_empty)
}

/// Applies the reduction for a certificate: returns the reduced graph, the
/// new parameter `k - delta_k`, and the record of the step.
pub fn apply_rule3(
    g: &Graph,
    k: i64,
    cert: &SLCertificate,
) -> Result<(Graph, i64, ReductionRecord), KernelError> {
    let cut = surgery(g, &cert.s, &cert.l)?;
    let delta_k = parameter_drop(cert.s.len(), cut.neighbor_map.is_empty());
    if !is_connected(&cut.graph) {
        return Err(KernelError::Invariant(
            "reduced graph is disconnected".into(),
        ));
    }
    let record = ReductionRecord {
        s: cert.s.clone(),
        l: cert.l.clone(),
        pre_vertex_count: g.n(),
        v_s: cut.v_s,
        v_l: cut.v_l,
        neighbor_map: cut.neighbor_map,
        index_map: cut.index_map,
        bsl_tree: cert.tree.clone(),
        pre_promotion_tree: cert.pre_promotion_tree.clone(),
        delta_k,
    };
    Ok((cut.graph, k - delta_k, record))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A spanning tree of the original graph with at least `k` internal
    /// vertices.
    Solved(SpanningTree),
    /// The reduced graph is an equivalent instance with at most `3k'`
    /// vertices.
    Kernel,
    /// `k ≤ 0`: any spanning tree is a witness.
    TrivialYes(SpanningTree),
    /// `k` exceeds the `n - 2` internal vertices any spanning tree can have.
    TrivialNo(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub k_original: i64,
    /// Graph and parameter when the reduction loop stopped.
    pub graph: Graph,
    pub k_prime: i64,
    pub trace: Vec<ReductionRecord>,
    pub outcome: Outcome,
}

impl KernelResult {
    pub fn is_kernel(&self) -> bool {
        matches!(self.outcome, Outcome::Kernel)
    }

    /// Witness tree of the original graph, when the reduction answered yes.
    pub fn witness(&self) -> Option<&SpanningTree> {
        match &self.outcome {
            Outcome::Solved(t) | Outcome::TrivialYes(t) => Some(t),
            _ => None,
        }
    }
}

/// Reduces `(g, k)` until the graph has at most `3k` vertices or a DFS tree
/// already has `k` internal vertices. The DFS is tried first in every round,
/// so small instances that a DFS happens to solve come back with a witness
/// instead of as a kernel.
pub fn kernelize(g: &Graph, k: i64) -> Result<KernelResult, KernelError> {
    if g.n() == 0 {
        return Err(KernelError::Precondition("graph has no vertices".into()));
    }
    if !is_connected(g) {
        return Err(KernelError::Precondition("graph is disconnected".into()));
    }
    let finish = |outcome| KernelResult {
        k_original: k,
        graph: g.clone(),
        k_prime: k,
        trace: Vec::new(),
        outcome,
    };
    if k <= 0 {
        return Ok(finish(Outcome::TrivialYes(dfs_tree(g, 0)?)));
    }
    let max_internal = g.n() as i64 - 2;
    if k > max_internal {
        return Ok(finish(Outcome::TrivialNo(format!(
            "k = {k} exceeds n - 2 = {max_internal}"
        ))));
    }

    let mut current = g.clone();
    let mut k_cur = k;
    let mut trace = Vec::new();
    loop {
        let dfs = dfs_tree(&current, 0)?;
        if dfs.internal_count(None) as i64 >= k_cur {
            let lifted = lift_solution(g, &trace, &dfs)?;
            if (lifted.internal_count(None) as i64) < k {
                return Err(KernelError::Invariant(
                    "lifted tree lost internal vertices".into(),
                ));
            }
            return Ok(KernelResult {
                k_original: k,
                graph: current,
                k_prime: k_cur,
                trace,
                outcome: Outcome::Solved(lifted),
            });
        }
        let n = current.n() as i64;
        if n <= 3 * k_cur {
            return Ok(KernelResult {
                k_original: k,
                graph: current,
                k_prime: k_cur,
                trace,
                outcome: Outcome::Kernel,
            });
        }
        let independent = dfs_leaf_independent_set(&current, &dfs);
        let cert = find_sl(&current, &independent)?;
        verify_certificate(&current, &cert)?;
        let (reduced, k_next, record) = apply_rule3(&current, k_cur, &cert)?;
        if reduced.n() >= current.n() || k_next > k_cur {
            return Err(KernelError::Invariant("reduction made no progress".into()));
        }
        trace.push(record);
        current = reduced;
        k_cur = k_next;
    }
}
