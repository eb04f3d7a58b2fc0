//! JSON trace of a kernelization run, and offline replay of it.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, SpanningTree, Vertex};
use crate::kernel::{
    parameter_drop, surgery, verify_certificate, verify_sets, KernelResult, Outcome,
    ReductionRecord, SLCertificate,
};

use super::edgelist::write_edge_list;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub s: Vec<Vertex>,
    pub l: Vec<Vertex>,
    pub v_s: Vertex,
    pub v_l: Vertex,
    pub neighbor_map: Vec<Vertex>,
    pub delta_k: i64,
    pub index_map: Vec<Option<Vertex>>,
    pub bsl_tree: Vec<[Vertex; 2]>,
    pub pre_promotion_tree: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub k: i64,
    pub input_vertices: usize,
    pub input_edges: usize,
    pub reductions: Vec<TraceStep>,
    /// One of `kernel`, `solved`, `trivial-yes`, `trivial-no`.
    pub outcome: String,
    pub k_prime: i64,
    pub kernel_vertices: usize,
    pub kernel_edges: usize,
}

fn edge_pairs(t: &SpanningTree) -> Vec<[Vertex; 2]> {
    t.edges().into_iter().map(|(u, v)| [u, v]).collect()
}

impl TraceStep {
    pub fn from_record(rec: &ReductionRecord) -> Self {
        TraceStep {
            s: rec.s.clone(),
            l: rec.l.clone(),
            v_s: rec.v_s,
            v_l: rec.v_l,
            neighbor_map: rec.neighbor_map.clone(),
            delta_k: rec.delta_k,
            index_map: rec.index_map.clone(),
            bsl_tree: edge_pairs(&rec.bsl_tree),
            pre_promotion_tree: edge_pairs(&rec.pre_promotion_tree),
        }
    }

    fn tree(&self, edges: &[[Vertex; 2]]) -> Option<SpanningTree> {
        SpanningTree::new(
            self.s.iter().chain(&self.l).copied(),
            edges.iter().map(|e| (e[0], e[1])),
        )
        .ok()
    }

    /// The certificate stored in this step, if its trees are well formed.
    pub fn certificate(&self) -> Option<SLCertificate> {
        Some(SLCertificate {
            s: self.s.clone(),
            l: self.l.clone(),
            pre_promotion_tree: self.tree(&self.pre_promotion_tree)?,
            tree: self.tree(&self.bsl_tree)?,
            promotions: 0,
        })
    }

    pub fn to_record(&self) -> Option<ReductionRecord> {
        let cert = self.certificate()?;
        Some(ReductionRecord {
            s: self.s.clone(),
            l: self.l.clone(),
            pre_vertex_count: self.index_map.len(),
            v_s: self.v_s,
            v_l: self.v_l,
            neighbor_map: self.neighbor_map.clone(),
            index_map: self.index_map.clone(),
            bsl_tree: cert.tree,
            pre_promotion_tree: cert.pre_promotion_tree,
            delta_k: self.delta_k,
        })
    }
}

impl TraceDocument {
    pub fn from_result(input: &Graph, result: &KernelResult) -> Self {
        let outcome = match result.outcome {
            Outcome::Kernel => "kernel",
            Outcome::Solved(_) => "solved",
            Outcome::TrivialYes(_) => "trivial-yes",
            Outcome::TrivialNo(_) => "trivial-no",
        };
        TraceDocument {
            k: result.k_original,
            input_vertices: input.n(),
            input_edges: input.edge_count(),
            reductions: result.trace.iter().map(TraceStep::from_record).collect(),
            outcome: outcome.to_string(),
            k_prime: result.k_prime,
            kernel_vertices: result.graph.n(),
            kernel_edges: result.graph.edge_count(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn records(&self) -> Option<Vec<ReductionRecord>> {
        self.reductions.iter().map(TraceStep::to_record).collect()
    }
}

/// The first property that failed during replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{invariant} ({detail})")]
pub struct VerifyFailure {
    pub invariant: String,
    pub detail: String,
}

fn fail<T>(invariant: &str, detail: impl Into<String>) -> Result<T, VerifyFailure> {
    Err(VerifyFailure {
        invariant: invariant.to_string(),
        detail: detail.into(),
    })
}

/// Replays `trace` on `input`, checking each stored certificate and the
/// surgery bookkeeping, and that the result is `kernel` byte for byte.
pub fn verify_artifacts(
    input: &Graph,
    trace: &TraceDocument,
    kernel: &Graph,
) -> Result<(), VerifyFailure> {
    if trace.input_vertices != input.n() || trace.input_edges != input.edge_count() {
        return fail("input graph", "vertex or edge count differs from the trace");
    }
    let mut current = input.clone();
    let mut k = trace.k;
    for (i, step) in trace.reductions.iter().enumerate() {
        let at = |what: &str| format!("reduction {i}: {what}");
        if step.index_map.len() != current.n() {
            return fail("index_map", at("length differs from the vertex count"));
        }
        if let Err(v) = verify_sets(&current, &step.s, &step.l) {
            return fail(&v.to_string(), at("certificate"));
        }
        let Some(cert) = step.certificate() else {
            return fail(
                "tree spans B(S,L)",
                at("stored tree is not a tree on S and L"),
            );
        };
        if let Err(v) = verify_certificate(&current, &cert) {
            return fail(&v.to_string(), at("certificate"));
        }
        let cut = match surgery(&current, &step.s, &step.l) {
            Ok(cut) => cut,
            Err(e) => return fail("surgery", at(&e.to_string())),
        };
        let expected_delta = parameter_drop(step.s.len(), cut.neighbor_map.is_empty());
        if step.delta_k != expected_delta {
            return fail(
                "delta_k",
                at(&format!(
                    "stored {}, expected {expected_delta}",
                    step.delta_k
                )),
            );
        }
        if cut.neighbor_map != step.neighbor_map {
            return fail("neighbor_map", at("differs from N(S)\\L"));
        }
        if cut.index_map != step.index_map {
            return fail("index_map", at("differs from replay"));
        }
        if (cut.v_s, cut.v_l) != (step.v_s, step.v_l) {
            return fail("v_S/v_L", at("differs from replay"));
        }
        current = cut.graph;
        k -= step.delta_k;
    }
    if k != trace.k_prime {
        return fail(
            "k'",
            format!("replay gives {k}, trace stores {}", trace.k_prime),
        );
    }
    if current.n() != trace.kernel_vertices || current.edge_count() != trace.kernel_edges {
        return fail("kernel size", "replayed graph size differs from the trace");
    }
    if write_edge_list(&current) != write_edge_list(kernel) {
        return fail(
            "kernel graph",
            "replayed graph differs from the kernel file",
        );
    }
    if trace.outcome == "kernel" && trace.k_prime >= 1 && kernel.n() as i64 > 3 * trace.k_prime {
        return fail(
            "3k' bound",
            format!("{} vertices for k' = {}", kernel.n(), trace.k_prime),
        );
    }
    Ok(())
}
