//! Seeded generators of connected test instances.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform random labelled tree plus uniformly random extra edges.
    RandomGnm,
    /// Random recursive tree plus chords between vertices two tree steps
    /// apart.
    TreePlus,
    /// A few hub vertices joined by a tree, every other vertex hanging off
    /// one or more hubs; the non-hubs form a large independent set.
    StarCluster,
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random-gnm" => Ok(Family::RandomGnm),
            "tree-plus" => Ok(Family::TreePlus),
            "star-cluster" => Ok(Family::StarCluster),
            other => Err(GenError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown family '{0}' (expected random-gnm, tree-plus or star-cluster)")]
    UnknownFamily(String),
    #[error("n must be at least 1")]
    NoVertices,
    #[error("family random-gnm needs --m")]
    MissingEdgeCount,
    #[error("m = {m} is outside the admissible range {min}..={max} for this family")]
    EdgeCount { m: usize, min: usize, max: usize },
}

fn pair(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

fn check_m(m: usize, min: usize, max: usize) -> Result<(), GenError> {
    if m < min || m > max {
        return Err(GenError::EdgeCount { m, min, max });
    }
    Ok(())
}

/// Uniform labelled tree on `0..n` from a random Prüfer sequence.
fn pruefer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push(pair(leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<Vertex> = leaves.into_iter().collect();
    edges.push(pair(last[0], last[1]));
    edges
}

/// Adds uniformly random non-edges until `edges` has `m` entries.
fn fill_uniform(n: usize, m: usize, edges: &mut BTreeSet<(Vertex, Vertex)>, rng: &mut ChaCha8Rng) {
    let max = n * (n - 1) / 2;
    if m - edges.len() > (max - edges.len()) / 2 {
        let mut free: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !edges.contains(e))
            .collect();
        free.shuffle(rng);
        let need = m - edges.len();
        edges.extend(free.into_iter().take(need));
        return;
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert(pair(u, v));
        }
    }
}

pub fn generate(family: Family, n: usize, m: Option<usize>, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = n * (n - 1) / 2;
    let edges: BTreeSet<(Vertex, Vertex)> = match family {
        Family::RandomGnm => {
            let m = m.ok_or(GenError::MissingEdgeCount)?;
            check_m(m, n - 1, max)?;
            let mut edges: BTreeSet<_> = pruefer_tree(n, &mut rng).into_iter().collect();
            fill_uniform(n, m, &mut edges, &mut rng);
            edges
        }
        Family::TreePlus => {
            let m = m.unwrap_or(n - 1);
            check_m(m, n - 1, max)?;
            let mut order: Vec<Vertex> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut adj = vec![Vec::new(); n];
            let mut edges = BTreeSet::new();
            for i in 1..n {
                let parent = order[rng.gen_range(0..i)];
                let child = order[i];
                adj[parent].push(child);
                adj[child].push(parent);
                edges.insert(pair(parent, child));
            }
            let mut misses = 0;
            while edges.len() < m && misses < 64 * n {
                let u = rng.gen_range(0..n);
                let mid = adj[u][rng.gen_range(0..adj[u].len())];
                let w = adj[mid][rng.gen_range(0..adj[mid].len())];
                if w == u || !edges.insert(pair(u, w)) {
                    misses += 1;
                }
            }
            fill_uniform(n, m, &mut edges, &mut rng);
            edges
        }
        Family::StarCluster => {
            let mut labels: Vec<Vertex> = (0..n).collect();
            labels.shuffle(&mut rng);
            let hubs = (n / 5).max(1);
            let (centers, spokes) = labels.split_at(hubs);
            let mut edges = BTreeSet::new();
            for i in 1..centers.len() {
                edges.insert(pair(centers[rng.gen_range(0..i)], centers[i]));
            }
            for &leaf in spokes {
                edges.insert(pair(leaf, centers[rng.gen_range(0..hubs)]));
            }
            // Extra edges never join two spokes.
            let mut pool: Vec<(Vertex, Vertex)> = spokes
                .iter()
                .flat_map(|&s| centers.iter().map(move |&c| pair(s, c)))
                .chain(
                    centers
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &a)| centers[i + 1..].iter().map(move |&b| pair(a, b))),
                )
                .filter(|e| !edges.contains(e))
                .collect();
            let m = m.unwrap_or(n - 1 + (spokes.len() / 4).min(pool.len()));
            check_m(m, n - 1, n - 1 + pool.len())?;
            pool.shuffle(&mut rng);
            let need = m - edges.len();
            edges.extend(pool.into_iter().take(need));
            edges
        }
    };
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}
