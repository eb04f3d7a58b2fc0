use std::collections::BTreeSet;

use crate::graph::{DisjointSets, Forest, Graph, SpanningTree, Vertex};

use super::certificate::SLCertificate;
use super::reduce::{surgery, ReductionRecord};
use super::KernelError;

/// Re-derives the graphs before each reduction by replaying the trace from
/// `g_original`, checking every record against the replay.
pub fn replay_trace(
    g_original: &Graph,
    trace: &[ReductionRecord],
) -> Result<Vec<Graph>, KernelError> {
    let mut graphs = vec![g_original.clone()];
    for (i, rec) in trace.iter().enumerate() {
        let pre = graphs.last().expect("nonempty");
        if rec.pre_vertex_count != pre.n() || rec.index_map.len() != pre.n() {
            return Err(KernelError::InconsistentTrace(format!(
                "record {i} expects {} vertices, graph has {}",
                rec.pre_vertex_count,
                pre.n()
            )));
        }
        let cut = surgery(pre, &rec.s, &rec.l)
            .map_err(|e| KernelError::InconsistentTrace(format!("record {i}: {e}")))?;
        if cut.index_map != rec.index_map {
            return Err(KernelError::InconsistentTrace(format!(
                "record {i}: index_map"
            )));
        }
        if cut.neighbor_map != rec.neighbor_map {
            return Err(KernelError::InconsistentTrace(format!(
                "record {i}: neighbor_map"
            )));
        }
        if (cut.v_s, cut.v_l) != (rec.v_s, rec.v_l) {
            return Err(KernelError::InconsistentTrace(format!(
                "record {i}: v_S/v_L"
            )));
        }
        graphs.push(cut.graph);
    }
    Ok(graphs)
}

/// Turns a spanning tree of the final reduced graph into a spanning tree of
/// `g_original`, undoing reductions last to first. For each record: drop
/// `v_S` and `v_L`, insert the stored `B(S, L)` tree, and reconnect each
/// former tree-neighbor `u` of `v_S` through its lowest-index neighbor in
/// `S`. Degrees outside `S ∪ L` are preserved, so each step gains at least
/// `2|S| - 2` internal vertices.
pub fn lift_solution(
    g_original: &Graph,
    trace: &[ReductionRecord],
    t: &SpanningTree,
) -> Result<SpanningTree, KernelError> {
    let graphs = replay_trace(g_original, trace)?;
    let last = graphs.last().expect("nonempty");
    t.check_spans(last).map_err(|e| {
        KernelError::InconsistentTrace(format!("tree does not fit the kernel: {e}"))
    })?;

    let mut tree = t.clone();
    for (rec, pre) in trace.iter().zip(&graphs).rev() {
        let new_to_old: Vec<Vertex> = {
            let mut inv = vec![usize::MAX; rec.v_s];
            for (old, m) in rec.index_map.iter().enumerate() {
                if let Some(new) = *m {
                    inv[new] = old;
                }
            }
            inv
        };
        let mut forest = Forest::new(0..pre.n());
        let mut reattach = Vec::new();
        for (a, b) in tree.edges() {
            match (a == rec.v_s || a == rec.v_l, b == rec.v_s || b == rec.v_l) {
                (false, false) => forest.add_edge(new_to_old[a], new_to_old[b]),
                (false, true) if b == rec.v_s => reattach.push(new_to_old[a]),
                (true, false) if a == rec.v_s => reattach.push(new_to_old[b]),
                (false, true) | (true, false) => {
                    return Err(KernelError::InconsistentTrace(
                        "v_L has a neighbor other than v_S".into(),
                    ));
                }
                (true, true) => {}
            }
        }
        for (a, b) in rec.bsl_tree.edges() {
            forest.add_edge(a, b);
        }
        for u in reattach {
            let v = rec
                .s
                .iter()
                .copied()
                .filter(|&v| pre.has_edge(u, v))
                .min()
                .ok_or_else(|| {
                    KernelError::InconsistentTrace(format!("vertex {u} has no neighbor in S"))
                })?;
            forest.add_edge(u, v);
        }
        tree = forest.into_tree()?;
        tree.check_spans(pre)?;
    }
    Ok(tree)
}

/// Rearranges a spanning tree of `g` so that all of `S` and exactly
/// `|S| - 1` vertices of `L` are internal, without losing internal vertices.
///
/// Edges at `L` are removed; while two `S`-vertices share a component, the
/// first edge on the path from the lower-indexed pair member is removed. The
/// certificate tree is then added and the remaining components are joined by
/// the lowest graph edges between them.
pub fn rearrange_tree(
    g: &Graph,
    t: &SpanningTree,
    cert: &SLCertificate,
) -> Result<SpanningTree, KernelError> {
    t.check_spans(g)?;
    let l_set: BTreeSet<Vertex> = cert.l.iter().copied().collect();
    let mut forest = Forest::new(0..g.n());
    for (a, b) in t.edges() {
        if !l_set.contains(&a) && !l_set.contains(&b) {
            forest.add_edge(a, b);
        }
    }
    'split: loop {
        for (i, &a) in cert.s.iter().enumerate() {
            for &b in &cert.s[i + 1..] {
                if let Some(path) = forest.path(a, b) {
                    forest.remove_edge(a, path[1]);
                    continue 'split;
                }
            }
        }
        break;
    }
    for (a, b) in cert.tree.edges() {
        forest.add_edge(a, b);
    }
    let labels = forest.components();
    let mut dsu = DisjointSets::new(g.n());
    for (&v, &c) in &labels {
        dsu.union(v, c);
    }
    for (a, b) in g.edges() {
        if dsu.union(a, b) {
            forest.add_edge(a, b);
        }
    }
    Ok(forest.into_tree()?)
}
