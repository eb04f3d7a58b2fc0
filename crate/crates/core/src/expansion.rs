//! Expansion-2 pairs in bipartite graphs.
//!
//! `X` has `Y`-expansion `c` when every `Z ⊆ X` has at least `c·|Z|`
//! neighbors in `Y`. Given a bipartite graph with `|Y| ≥ 2|X|` and no
//! isolated `Y`-vertex, [`find_expansion_2`] returns nonempty `X' ⊆ X`,
//! `Y' ⊆ Y` with `N(Y') = X'` and `X'` having `Y'`-expansion 2.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{BipartiteSubgraph, Vertex};
use crate::matching::{max_matching_local, saturates_left};

const EXPANSION: usize = 2;

/// Largest `|X'|` accepted by [`verify_expansion`]'s subset enumeration.
pub const VERIFY_MAX_X: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("side X is empty")]
    EmptyX,
    #[error("|Y| = {y} is smaller than 2|X| = {}", 2 * .x)]
    TooFewY { x: usize, y: usize },
    #[error("vertex {0} of side Y has no neighbor")]
    IsolatedY(Vertex),
    #[error("|X'| = {0} exceeds the enumeration guard of {VERIFY_MAX_X}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionPair {
    pub x_prime: Vec<Vertex>,
    pub y_prime: Vec<Vertex>,
}

/// Finds an expansion-2 pair. Works on a graph with two copies of every
/// `X`-vertex: if a maximum matching covers all copies, the current sides
/// qualify. Otherwise the `X`-vertices reachable by alternating paths from an
/// unmatched copy, together with their `Y`-neighbors, form a Hall violator;
/// both are removed and the search repeats on what remains. The removal
/// keeps `|Y| > 2|X|` and leaves every remaining `Y`-vertex with all of its
/// neighbors inside the remaining `X`, so the loop ends on a nonempty pair.
pub fn find_expansion_2(b: &BipartiteSubgraph) -> Result<ExpansionPair, ExpansionError> {
    let (nx, ny) = (b.x().len(), b.y().len());
    if nx == 0 {
        return Err(ExpansionError::EmptyX);
    }
    if ny < EXPANSION * nx {
        return Err(ExpansionError::TooFewY { x: nx, y: ny });
    }
    if let Some(j) = (0..ny).find(|&j| b.y_neighbors(j).is_empty()) {
        return Err(ExpansionError::IsolatedY(b.y()[j]));
    }

    let mut x_alive = vec![true; nx];
    let mut y_alive = vec![true; ny];
    loop {
        let xs: Vec<usize> = (0..nx).filter(|&i| x_alive[i]).collect();
        // Left vertex `c` is copy `c % 2` of xs[c / 2].
        let adj: Vec<Vec<usize>> = xs
            .iter()
            .flat_map(|&i| {
                let list: Vec<usize> = b
                    .x_neighbors(i)
                    .iter()
                    .copied()
                    .filter(|&j| y_alive[j])
                    .collect();
                std::iter::repeat_n(list, EXPANSION)
            })
            .collect();
        let left_mate = max_matching_local(&adj, ny);
        let mut right_mate = vec![None; ny];
        for (c, m) in left_mate.iter().enumerate() {
            if let Some(j) = *m {
                right_mate[j] = Some(c);
            }
        }
        let unmatched: Vec<usize> = (0..adj.len()).filter(|&c| left_mate[c].is_none()).collect();
        if unmatched.is_empty() {
            let x_prime: Vec<Vertex> = xs.iter().map(|&i| b.x()[i]).collect();
            let y_prime: Vec<Vertex> = (0..ny).filter(|&j| y_alive[j]).map(|j| b.y()[j]).collect();
            return Ok(ExpansionPair { x_prime, y_prime });
        }

        let mut reached_left = vec![false; adj.len()];
        let mut reached_right = vec![false; ny];
        let mut stack = unmatched;
        for &c in &stack {
            reached_left[c] = true;
        }
        while let Some(c) = stack.pop() {
            for &j in &adj[c] {
                if !reached_right[j] {
                    reached_right[j] = true;
                    // Every reached Y-vertex is matched, else the matching
                    // would not be maximum.
                    let mate = right_mate[j].expect("maximum matching has no augmenting path");
                    if !reached_left[mate] {
                        reached_left[mate] = true;
                        stack.push(mate);
                    }
                }
            }
        }
        for (c, &hit) in reached_left.iter().enumerate() {
            if hit {
                x_alive[xs[c / EXPANSION]] = false;
            }
        }
        for (j, &hit) in reached_right.iter().enumerate() {
            if hit {
                y_alive[j] = false;
            }
        }
        debug_assert!(x_alive.iter().any(|&a| a), "expansion recursion emptied X");
    }
}

/// Checks `N(Y') = X'` and that every nonempty `Z ⊆ X'` has at least
/// `c·|Z|` neighbors in `Y'`, by enumerating all subsets of `X'`.
pub fn verify_expansion(
    b: &BipartiteSubgraph,
    p: &ExpansionPair,
    c: usize,
) -> Result<bool, ExpansionError> {
    if p.x_prime.len() > VERIFY_MAX_X {
        return Err(ExpansionError::TooLarge(p.x_prime.len()));
    }
    let Some(xi) = p
        .x_prime
        .iter()
        .map(|&v| b.x_index(v))
        .collect::<Option<Vec<_>>>()
    else {
        return Ok(false);
    };
    let Some(yi) = p
        .y_prime
        .iter()
        .map(|&v| b.y_index(v))
        .collect::<Option<Vec<_>>>()
    else {
        return Ok(false);
    };
    if xi.is_empty() || yi.is_empty() {
        return Ok(false);
    }
    let x_set: BTreeSet<usize> = xi.iter().copied().collect();
    let y_set: BTreeSet<usize> = yi.iter().copied().collect();
    let n_of_y: BTreeSet<usize> = yi
        .iter()
        .flat_map(|&j| b.y_neighbors(j).iter().copied())
        .collect();
    if n_of_y != x_set {
        return Ok(false);
    }
    // Neighborhoods inside Y' as bitmasks over positions in `yi`.
    let y_pos: Vec<usize> = yi.clone();
    let masks: Vec<Vec<bool>> = xi
        .iter()
        .map(|&i| {
            let nb: BTreeSet<usize> = b
                .x_neighbors(i)
                .iter()
                .copied()
                .filter(|j| y_set.contains(j))
                .collect();
            y_pos.iter().map(|j| nb.contains(j)).collect()
        })
        .collect();
    let k = xi.len();
    for subset in 1u32..1 << k {
        let mut hit = vec![false; y_pos.len()];
        for (bit, row) in masks.iter().enumerate() {
            if subset >> bit & 1 == 1 {
                for (h, &m) in hit.iter_mut().zip(row) {
                    *h |= m;
                }
            }
        }
        let covered = hit.iter().filter(|&&h| h).count();
        if covered < c * subset.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial check of `Y`-expansion `c` for all of side `X`: by Hall's
/// theorem it holds iff `c` copies of `X` can be matched into `Y`.
pub fn has_expansion(b: &BipartiteSubgraph, c: usize) -> bool {
    let adj: Vec<Vec<usize>> = (0..b.x().len())
        .flat_map(|i| std::iter::repeat_n(b.x_neighbors(i).to_vec(), c))
        .collect();
    saturates_left(&adj, b.y().len())
}
