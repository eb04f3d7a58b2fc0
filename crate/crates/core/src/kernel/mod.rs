//! The reduction pipeline: a DFS either solves the instance or exposes a
//! large independent set; an `(S, L)` certificate on that set lets `S ∪ L`
//! be replaced by two vertices while the parameter drops by `2|S| - 2`.
//! Repeating until `n ≤ 3k` yields a kernel on at most `3k` vertices.

mod certificate;
mod lift;
mod reduce;

use thiserror::Error;

use crate::expansion::ExpansionError;
use crate::graph::{GraphError, TreeError};
use crate::hypermatroid::HypergraphError;

pub use certificate::{
    find_sl, verify_certificate, verify_sets, CertificateViolation, SLCertificate,
};
pub use lift::{lift_solution, rearrange_tree, replay_trace};
pub use reduce::{
    apply_rule3, kernelize, parameter_drop, surgery, KernelResult, Outcome, ReductionRecord,
    Surgery,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("inconsistent trace: {0}")]
    InconsistentTrace(String),
    #[error("certificate check failed: {0}")]
    Certificate(#[from] CertificateViolation),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}
