//! Construction and checking of `(S, L)` certificates: `S ⊆ V \ I`,
//! `L ⊆ I`, `N(L) = S`, `S` has `L`-expansion 2, and `B(S, L)` has a
//! spanning tree in which every vertex of `S` and exactly `|S| - 1` vertices
//! of `L` are internal.

use std::collections::BTreeSet;
use std::fmt;

use crate::expansion::{find_expansion_2, has_expansion, verify_expansion, ExpansionPair};
use crate::graph::{bipartite_between, is_connected, Forest, Graph, SpanningTree, Vertex};
use crate::hypermatroid::{deficient_partition, greedy_hypertree, shrink_to_tree, Hypergraph};
use crate::matching::max_matching_local;

use super::KernelError;

/// Above this `|S|`, expansion is checked by matching instead of subset
/// enumeration.
const BRUTE_FORCE_EXPANSION_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SLCertificate {
    pub s: Vec<Vertex>,
    pub l: Vec<Vertex>,
    /// Spanning tree of `B(S, L)` in which every `L`-vertex has degree at
    /// most 2, before leaves of `S` are promoted.
    pub pre_promotion_tree: SpanningTree,
    /// Final tree: all of `S` and exactly `|S| - 1` of `L` internal.
    pub tree: SpanningTree,
    /// Number of favorite-edge exchanges performed.
    pub promotions: usize,
}

/// A certificate property that does not hold, named after the property.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("S and L nonempty")]
    Empty,
    #[error("S, L disjoint vertex sets")]
    NotDisjoint,
    #[error("L independent")]
    LNotIndependent,
    #[error("N(L)=S")]
    NeighborhoodMismatch,
    #[error("S has L-expansion 2")]
    Expansion,
    #[error("tree spans B(S,L)")]
    TreeShape,
    #[error("all S internal")]
    SLeaf,
    #[error("|S|-1 of L internal")]
    LInternalCount,
    #[error("pre-promotion L degree <= 2")]
    PrePromotionDegree,
}

impl fmt::Display for SLCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S={:?} L={:?}", self.s, self.l)
    }
}

fn tree_in_bsl(g: &Graph, s: &BTreeSet<Vertex>, l: &BTreeSet<Vertex>, t: &SpanningTree) -> bool {
    t.vertex_count() == s.len() + l.len()
        && t.vertices().all(|v| s.contains(&v) || l.contains(&v))
        && t.edges()
            .into_iter()
            .all(|(u, v)| g.has_edge(u, v) && (s.contains(&u) != s.contains(&v)))
}

/// Checks the tree-independent properties of a candidate pair `(S, L)`:
/// nonempty, disjoint, `L` independent, `N(L) = S`, and `L`-expansion 2.
pub fn verify_sets(
    g: &Graph,
    s_list: &[Vertex],
    l_list: &[Vertex],
) -> Result<(), CertificateViolation> {
    use CertificateViolation::*;
    if s_list.is_empty() || l_list.is_empty() {
        return Err(Empty);
    }
    let s: BTreeSet<Vertex> = s_list.iter().copied().collect();
    let l: BTreeSet<Vertex> = l_list.iter().copied().collect();
    if s.len() != s_list.len()
        || l.len() != l_list.len()
        || !s.is_disjoint(&l)
        || s.iter().chain(&l).any(|&v| v >= g.n())
    {
        return Err(NotDisjoint);
    }
    if !g.is_independent(l_list) {
        return Err(LNotIndependent);
    }
    if g.neighborhood_of_set(l_list) != s {
        return Err(NeighborhoodMismatch);
    }
    let b = bipartite_between(g, s_list, l_list).map_err(|_| NotDisjoint)?;
    let expands = if s_list.len() <= BRUTE_FORCE_EXPANSION_MAX {
        let pair = ExpansionPair {
            x_prime: s_list.to_vec(),
            y_prime: l_list.to_vec(),
        };
        verify_expansion(&b, &pair, 2).unwrap_or(false)
    } else {
        has_expansion(&b, 2)
    };
    if !expands {
        return Err(Expansion);
    }
    Ok(())
}

/// Checks every property of an `(S, L)` certificate against `g`.
pub fn verify_certificate(g: &Graph, cert: &SLCertificate) -> Result<(), CertificateViolation> {
    use CertificateViolation::*;
    verify_sets(g, &cert.s, &cert.l)?;
    let s: BTreeSet<Vertex> = cert.s.iter().copied().collect();
    let l: BTreeSet<Vertex> = cert.l.iter().copied().collect();
    if !tree_in_bsl(g, &s, &l, &cert.tree) || !tree_in_bsl(g, &s, &l, &cert.pre_promotion_tree) {
        return Err(TreeShape);
    }
    if cert.s.iter().any(|&v| !cert.tree.is_internal(v)) {
        return Err(SLeaf);
    }
    if cert.tree.internal_count(Some(&cert.l)) + 1 != cert.s.len() {
        return Err(LInternalCount);
    }
    if cert
        .l
        .iter()
        .any(|&v| cert.pre_promotion_tree.degree(v) > 2)
    {
        return Err(PrePromotionDegree);
    }
    Ok(())
}

/// Finds an `(S, L)` certificate for a connected graph on at least three
/// vertices and an independent set `I` with `3|I| ≥ 2n`.
///
/// 1. Expansion on `B(V \ I, I)` gives `S'`, `L'` with `N(L') = S'` and
///    `L'`-expansion 2.
/// 2. The hypergraph on `S'` with edges `N(w)`, `w ∈ L'`, either has a
///    hypertree, which shrinks to a tree on `S'` and re-expands through the
///    defining `L'`-vertices, or has a deficient partition. In the latter
///    case some part `P` has at least `2|P|` hyperedges inside it; the search
///    repeats on `P` and the `L'`-vertices whose neighborhood lies in `P`.
/// 3. Two edge-disjoint matchings saturating `S` (from a matching of a
///    doubled `S` into `L`) supply favorite edges; each `S`-leaf is promoted
///    by exchanging a tree edge for one of its favorite edges.
pub fn find_sl(g: &Graph, independent: &[Vertex]) -> Result<SLCertificate, KernelError> {
    let n = g.n();
    if n < 3 {
        return Err(KernelError::Precondition(format!("need n >= 3, got {n}")));
    }
    if !is_connected(g) {
        return Err(KernelError::Precondition("graph is disconnected".into()));
    }
    let mut indep = independent.to_vec();
    indep.sort_unstable();
    indep.dedup();
    if indep.iter().any(|&v| v >= n) || !g.is_independent(&indep) {
        return Err(KernelError::Precondition(
            "vertex set is not independent".into(),
        ));
    }
    if 3 * indep.len() < 2 * n {
        return Err(KernelError::Precondition(format!(
            "independent set of size {} is below 2n/3 for n = {n}",
            indep.len()
        )));
    }
    let rest: Vec<Vertex> = (0..n).filter(|v| indep.binary_search(v).is_err()).collect();
    let mut pair = find_expansion_2(&bipartite_between(g, &rest, &indep)?)?;

    let (s, l, pre_promotion_tree) = loop {
        let ExpansionPair {
            x_prime: s,
            y_prime: l,
        } = pair;
        if s.len() == 1 {
            let tree =
                SpanningTree::new(s.iter().chain(&l).copied(), l.iter().map(|&w| (s[0], w)))?;
            break (s, l, tree);
        }
        let local = |v: Vertex| s.binary_search(&v).expect("N(L') = S'");
        let h = Hypergraph::new(
            s.len(),
            l.iter()
                .map(|&w| g.neighbors(w).iter().map(|&v| local(v)).collect())
                .collect(),
        )?;
        if let Some(hypertree) = greedy_hypertree(&h) {
            let shrunk = shrink_to_tree(&h, &hypertree)?;
            let mut forest = Forest::new(s.iter().chain(&l).copied());
            let mut used = BTreeSet::new();
            for &(id, a, b) in &shrunk.assignment {
                forest.add_edge(l[id], s[a]);
                forest.add_edge(l[id], s[b]);
                used.insert(l[id]);
            }
            for &w in l.iter().filter(|w| !used.contains(*w)) {
                forest.add_edge(w, g.neighbors(w)[0]);
            }
            break (s, l, forest.into_tree()?);
        }

        let partition = deficient_partition(&h).ok_or_else(|| {
            KernelError::Invariant(
                "hypergraph has neither a hypertree nor a deficient partition".into(),
            )
        })?;
        let mut part_of = vec![0; s.len()];
        for (i, part) in partition.parts().iter().enumerate() {
            for &v in part {
                part_of[v] = i;
            }
        }
        let mut inside = vec![0usize; partition.len()];
        for e in h.edges() {
            if e.iter().all(|&v| part_of[v] == part_of[e[0]]) {
                inside[part_of[e[0]]] += 1;
            }
        }
        let j = (0..partition.len())
            .find(|&i| inside[i] >= 2 * partition.parts()[i].len())
            .ok_or_else(|| KernelError::Invariant("no part holds 2|P| hyperedges".into()))?;
        let x: Vec<Vertex> = partition.parts()[j].iter().map(|&v| s[v]).collect();
        let y: Vec<Vertex> = l
            .iter()
            .copied()
            .filter(|&w| g.neighbors(w).iter().all(|v| x.binary_search(v).is_ok()))
            .collect();
        pair = find_expansion_2(&bipartite_between(g, &x, &y)?)?;
        if pair.x_prime.len() >= s.len() {
            return Err(KernelError::Invariant("recursion did not shrink S'".into()));
        }
    };

    let (tree, promotions) = promote_s_leaves(g, &s, &l, &pre_promotion_tree)?;
    Ok(SLCertificate {
        s,
        l,
        pre_promotion_tree,
        tree,
        promotions,
    })
}

/// Makes every vertex of `S` internal without changing any `L`-degree.
fn promote_s_leaves(
    g: &Graph,
    s: &[Vertex],
    l: &[Vertex],
    start: &SpanningTree,
) -> Result<(SpanningTree, usize), KernelError> {
    let b = bipartite_between(g, s, l)?;
    // Left vertex i < |S| is s[i]; left vertex |S| + i is its copy.
    let adj: Vec<Vec<usize>> = (0..2 * s.len())
        .map(|c| b.x_neighbors(c % s.len()).to_vec())
        .collect();
    let mate = max_matching_local(&adj, l.len());
    let favorites: Vec<[Vertex; 2]> = (0..s.len())
        .map(|i| match (mate[i], mate[i + s.len()]) {
            (Some(a), Some(c)) => Ok([b.y()[a], b.y()[c]]),
            _ => Err(KernelError::Invariant(
                "no matching saturates S and its copy".into(),
            )),
        })
        .collect::<Result<_, _>>()?;

    let mut forest = Forest::from_tree(start);
    let mut promotions = 0;
    while let Some(i) = (0..s.len()).find(|&i| forest.degree(s[i]) < 2) {
        let v = s[i];
        // Every exchange adds a favorite edge and never removes one.
        if promotions >= 2 * s.len() {
            return Err(KernelError::Invariant(
                "favorite-edge promotion did not terminate".into(),
            ));
        }
        let u = *favorites[i]
            .iter()
            .find(|&&u| !forest.has_edge(u, v))
            .ok_or_else(|| {
                KernelError::Invariant(format!("leaf {v} already holds both favorite edges"))
            })?;
        let path = forest
            .path(u, v)
            .ok_or_else(|| KernelError::Invariant("tree is disconnected".into()))?;
        forest.remove_edge(u, path[1]);
        forest.add_edge(u, v);
        promotions += 1;
    }
    Ok((forest.into_tree()?, promotions))
}
