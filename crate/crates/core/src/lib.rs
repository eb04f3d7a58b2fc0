//! Kernelization for the maximum internal spanning tree problem: given a
//! connected graph and `k`, either find a spanning tree with at least `k`
//! internal vertices or shrink the instance to an equivalent one on at most
//! `3k` vertices.
//!
//! ```
//! use mist_kernel::{kernelize, Graph};
//!
//! let star = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
//! let r = kernelize(&star, 2).unwrap();
//! assert!(r.graph.n() <= 6);
//! ```

pub mod expansion;
pub mod graph;
pub mod hypermatroid;
pub mod io;
pub mod kernel;
pub mod matching;
pub mod oracle;

#[cfg(test)]
mod testutil;

pub use graph::{dfs_tree, is_connected, Graph, GraphError, SpanningTree, TreeError, Vertex};
pub use kernel::{
    find_sl, kernelize, lift_solution, rearrange_tree, verify_certificate, KernelError,
    KernelResult, Outcome, ReductionRecord, SLCertificate,
};
pub use oracle::{decide_pist, opt_internal, Decision, OptResult, OracleError};
