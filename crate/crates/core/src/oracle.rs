//! Exact maximum-internal spanning tree for small graphs, and the
//! kernelize-then-solve decision procedure built on it.

use thiserror::Error;

use crate::graph::{is_connected, Graph, SpanningTree, Vertex};
use crate::kernel::{kernelize, lift_solution, KernelError, KernelResult, Outcome};

/// Default guard on the vertex count accepted by [`opt_internal`].
pub const DEFAULT_MAX_N: usize = 18;
/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "MIST_ORACLE_MAX_N";
/// The dynamic program allocates `3n·2^n` bytes; never go past this.
const HARD_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the oracle limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Reads the oracle guard from `MIST_ORACLE_MAX_N`, falling back to the
/// default when unset or unparsable.
pub fn max_n_from_env() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub opt: usize,
    pub witness: SpanningTree,
}

const NONE: i8 = -1;

/// Subset dynamic program over rooted subtrees.
///
/// `best[S][r][c]` is the largest number of internal vertices in `S \ {r}`
/// over trees spanning `G[S]` rooted at `r`, where `c` is the number of
/// children of `r` capped at 2. `hang[T][r]` is the best subtree on `T`
/// hanging from `r` (its root is a neighbor of `r` and is internal iff it
/// has a child). A tree on `S` is split by the subtree containing the lowest
/// vertex of `S \ {r}`.
struct Table {
    n: usize,
    best: Vec<i8>,
    hang: Vec<i8>,
    adj_mask: Vec<u32>,
}

impl Table {
    fn best(&self, set: u32, r: usize, c: usize) -> i8 {
        self.best[(set as usize * self.n + r) * 3 + c]
    }

    fn hang(&self, set: u32, r: usize) -> i8 {
        self.hang[set as usize * self.n + r]
    }

    /// Best value of a subtree on `set` rooted at `c` that has a parent.
    fn rooted(&self, set: u32, c: usize) -> i8 {
        (0..3)
            .filter_map(|cc| {
                let b = self.best(set, c, cc);
                (b != NONE).then(|| b + i8::from(cc >= 1))
            })
            .max()
            .unwrap_or(NONE)
    }

    fn build(g: &Graph) -> Table {
        let n = g.n();
        let adj_mask: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let full = 1usize << n;
        let mut t = Table {
            n,
            best: vec![NONE; full * n * 3],
            hang: vec![NONE; full * n],
            adj_mask,
        };
        for set in 1u32..full as u32 {
            for r in (0..n).filter(|&r| set >> r & 1 == 1) {
                let others = set & !(1 << r);
                if others == 0 {
                    t.best[(set as usize * n + r) * 3] = 0;
                    continue;
                }
                let low = others & others.wrapping_neg();
                let rest = others & !low;
                let mut acc = [NONE; 3];
                // Enumerate every subset of `rest`.
                let mut sub = rest;
                loop {
                    let part = sub | low;
                    let h = t.hang(part, r);
                    if h != NONE {
                        let remain = set & !part;
                        for c in 0..3 {
                            let b = t.best(remain, r, c);
                            if b != NONE {
                                let slot = &mut acc[(c + 1).min(2)];
                                *slot = (*slot).max(h + b);
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                let base = (set as usize * n + r) * 3;
                t.best[base..base + 3].copy_from_slice(&acc);
            }
            for r in (0..n).filter(|&r| set >> r & 1 == 0) {
                let mut cands = set & t.adj_mask[r];
                let mut top = NONE;
                while cands != 0 {
                    let c = cands.trailing_zeros() as usize;
                    cands &= cands - 1;
                    top = top.max(t.rooted(set, c));
                }
                t.hang[set as usize * n + r] = top;
            }
        }
        t
    }

    /// Appends the edges of an optimal tree for state `(set, r, c)`.
    fn trace(&self, set: u32, r: usize, c: usize, edges: &mut Vec<(Vertex, Vertex)>) {
        let target = self.best(set, r, c);
        let others = set & !(1 << r);
        if others == 0 {
            return;
        }
        let low = others & others.wrapping_neg();
        let rest = others & !low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            let h = self.hang(part, r);
            if h != NONE {
                let remain = set & !part;
                for prev in 0..3 {
                    let b = self.best(remain, r, prev);
                    if b != NONE && (prev + 1).min(2) == c && h + b == target {
                        let child = self.hanging_root(part, r, h);
                        edges.push((r.min(child), r.max(child)));
                        let cc = (0..3)
                            .find(|&cc| {
                                let b = self.best(part, child, cc);
                                b != NONE && b + i8::from(cc >= 1) == h
                            })
                            .expect("hang value is realised");
                        self.trace(part, child, cc, edges);
                        self.trace(remain, r, prev, edges);
                        return;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        unreachable!("table entry without a realising split");
    }

    fn hanging_root(&self, set: u32, r: usize, value: i8) -> usize {
        let mut cands = set & self.adj_mask[r];
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.rooted(set, c) == value {
                return c;
            }
        }
        unreachable!("hang value without a root");
    }
}

/// Maximum number of internal vertices over all spanning trees of `g`, with
/// an optimal tree. Exact; exponential in `n`.
pub fn opt_internal(g: &Graph) -> Result<OptResult, OracleError> {
    opt_internal_with_limit(g, DEFAULT_MAX_N)
}

pub fn opt_internal_with_limit(g: &Graph, max_n: usize) -> Result<OptResult, OracleError> {
    let n = g.n();
    let max = max_n.min(HARD_MAX_N);
    if n > max {
        return Err(OracleError::TooLarge { n, max });
    }
    if n == 0 || !is_connected(g) {
        return Err(OracleError::Disconnected);
    }
    if n == 1 {
        let witness = SpanningTree::new([0], []).expect("single vertex");
        return Ok(OptResult { opt: 0, witness });
    }
    let table = Table::build(g);
    let full = ((1u64 << n) - 1) as u32;
    let (c, value) = (0..3)
        .filter_map(|c| {
            let b = table.best(full, 0, c);
            (b != NONE).then(|| (c, b + i8::from(c >= 2)))
        })
        .max_by_key(|&(c, v)| (v, std::cmp::Reverse(c)))
        .expect("connected graph has a spanning tree");
    let mut edges = Vec::with_capacity(n - 1);
    table.trace(full, 0, c, &mut edges);
    let witness = SpanningTree::spanning(g, &edges).expect("traced edges form a spanning tree");
    assert_eq!(
        witness.internal_count(None),
        value as usize,
        "witness must realise the optimum"
    );
    Ok(OptResult {
        opt: value as usize,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    /// Spanning tree of the input with at least `k` internal vertices.
    pub witness: Option<SpanningTree>,
    pub kernel: KernelResult,
}

/// Decides whether `g` has a spanning tree with at least `k` internal
/// vertices: kernelize, solve the kernel exactly, and lift a yes-witness.
pub fn decide_pist(g: &Graph, k: i64) -> Result<Decision, OracleError> {
    decide_pist_with_limit(g, k, DEFAULT_MAX_N)
}

pub fn decide_pist_with_limit(g: &Graph, k: i64, max_n: usize) -> Result<Decision, OracleError> {
    if !is_connected(g) {
        return Err(OracleError::Disconnected);
    }
    let kernel = kernelize(g, k)?;
    let (answer, witness) = match &kernel.outcome {
        Outcome::Solved(t) | Outcome::TrivialYes(t) => (true, Some(t.clone())),
        Outcome::TrivialNo(_) => (false, None),
        Outcome::Kernel => {
            let solved = opt_internal_with_limit(&kernel.graph, max_n)?;
            if solved.opt as i64 >= kernel.k_prime {
                let lifted = lift_solution(g, &kernel.trace, &solved.witness)?;
                (true, Some(lifted))
            } else {
                (false, None)
            }
        }
    };
    if let Some(t) = &witness {
        t.check_spans(g).map_err(KernelError::from)?;
        if (t.internal_count(None) as i64) < k {
            return Err(KernelError::Invariant(
                "witness has fewer than k internal vertices".into(),
            )
            .into());
        }
    }
    Ok(Decision {
        answer,
        witness,
        kernel,
    })
}
