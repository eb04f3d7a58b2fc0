//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All reference values come from the small
//! brute-force routines below, not from the library.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mist_kernel::expansion::{find_expansion_2, verify_expansion};
use mist_kernel::graph::BipartiteSubgraph;
use mist_kernel::hypermatroid::{deficient_partition, greedy_hypertree, Hypergraph};
use mist_kernel::io::{generate, verify_artifacts, write_edge_list, Family, TraceDocument};
use mist_kernel::{
    decide_pist, find_sl, kernelize, opt_internal, rearrange_tree, Graph, Outcome, ReductionRecord,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Edge = (usize, usize);

// ---------------------------------------------------------------------------
// Reference routines
// ---------------------------------------------------------------------------

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// `tree` is a spanning tree of the graph with vertex count `n` and edge set `host`.
fn is_spanning_tree(n: usize, host: &BTreeSet<Edge>, tree: &[Edge]) -> bool {
    if tree.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in tree {
        let e = (u.min(v), u.max(v));
        if !host.contains(&e) {
            return false;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn internal_vertices(tree: &[Edge]) -> BTreeSet<usize> {
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in tree {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    deg.into_iter()
        .filter(|&(_, d)| d >= 2)
        .map(|(v, _)| v)
        .collect()
}

fn edge_set(g: &Graph) -> BTreeSet<Edge> {
    g.edges().collect()
}

/// Maximum internal count over all spanning trees, by include/exclude
/// backtracking over the edge list.
fn brute_opt(n: usize, edges: &[Edge]) -> usize {
    fn rec(
        n: usize,
        edges: &[Edge],
        i: usize,
        parent: &mut Vec<usize>,
        chosen: &mut Vec<Edge>,
        best: &mut usize,
    ) {
        if chosen.len() + 1 == n {
            *best = (*best).max(internal_vertices(chosen).len());
            return;
        }
        if edges.len() - i < n - 1 - chosen.len() {
            return;
        }
        let (u, v) = edges[i];
        let (a, b) = (find(parent, u), find(parent, v));
        if a != b {
            let saved = parent.clone();
            parent[a] = b;
            chosen.push((u, v));
            rec(n, edges, i + 1, parent, chosen, best);
            chosen.pop();
            *parent = saved;
        }
        rec(n, edges, i + 1, parent, chosen, best);
    }
    if n <= 1 {
        return 0;
    }
    let mut best = 0;
    rec(
        n,
        edges,
        0,
        &mut (0..n).collect(),
        &mut Vec::new(),
        &mut best,
    );
    best
}

fn has_hamiltonian_path(n: usize, edges: &[Edge]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] |= 1 << v;
    }
    for mask in 1..=full {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        for (v, &nbrs) in adj.iter().enumerate() {
            if ends >> v & 1 == 1 {
                let mut next = nbrs & !mask;
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    reach[full as usize] != 0
}

fn neighbors_in(edges: &BTreeSet<Edge>, v: usize) -> BTreeSet<usize> {
    edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .collect()
}

/// Every nonempty `Z ⊆ xs` has at least `2|Z|` neighbors among `ys`.
fn expands_twice(
    xs: &[usize],
    ys: &BTreeSet<usize>,
    adj: &dyn Fn(usize) -> BTreeSet<usize>,
) -> bool {
    if xs.len() <= 12 {
        let nbrs: Vec<BTreeSet<usize>> = xs
            .iter()
            .map(|&x| adj(x).intersection(ys).copied().collect())
            .collect();
        return (1u32..1 << xs.len()).all(|mask| {
            let mut union: BTreeSet<usize> = BTreeSet::new();
            for (i, set) in nbrs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    union.extend(set);
                }
            }
            union.len() >= 2 * mask.count_ones() as usize
        });
    }
    // Hall's condition for two copies of each x, by augmenting paths.
    let ylist: Vec<usize> = ys.iter().copied().collect();
    let copies: Vec<Vec<usize>> = xs
        .iter()
        .flat_map(|&x| {
            let row: Vec<usize> = ylist
                .iter()
                .enumerate()
                .filter(|(_, y)| adj(x).contains(y))
                .map(|(j, _)| j)
                .collect();
            [row.clone(), row]
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; ylist.len()];
    fn augment(
        i: usize,
        copies: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &j in &copies[i] {
            if !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|o| augment(o, copies, owner, seen)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..copies.len()).all(|i| augment(i, &copies, &mut owner, &mut vec![false; ylist.len()]))
}

/// Checks every certificate property of `rec` against the graph it was
/// applied to.
fn check_record(pre: &Graph, rec: &ReductionRecord) -> Result<(), String> {
    let host = edge_set(pre);
    let s: BTreeSet<usize> = rec.s.iter().copied().collect();
    let l: BTreeSet<usize> = rec.l.iter().copied().collect();
    if s.is_empty() || l.is_empty() || !s.is_disjoint(&l) {
        return Err(format!("S={:?} L={:?}: empty or overlapping", rec.s, rec.l));
    }
    for &a in &l {
        for &b in &l {
            if host.contains(&(a, b)) {
                return Err(format!("L not independent: {a}-{b}"));
            }
        }
    }
    let n_l: BTreeSet<usize> = l.iter().flat_map(|&v| neighbors_in(&host, v)).collect();
    if n_l != s {
        return Err(format!("N(L) = {n_l:?} but S = {s:?}"));
    }
    if !expands_twice(&rec.s, &l, &|x| neighbors_in(&host, x)) {
        return Err("S lacks L-expansion 2".into());
    }
    let bsl: BTreeSet<Edge> = host
        .iter()
        .copied()
        .filter(|&(a, b)| (s.contains(&a) && l.contains(&b)) || (s.contains(&b) && l.contains(&a)))
        .collect();
    let order: Vec<usize> = s.iter().chain(&l).copied().collect();
    let local = |v: usize| order.iter().position(|&w| w == v).unwrap();
    let local_host: BTreeSet<Edge> = bsl
        .iter()
        .map(|&(a, b)| (local(a).min(local(b)), local(a).max(local(b))))
        .collect();
    for (name, tree) in [
        ("tree", &rec.bsl_tree),
        ("pre-promotion tree", &rec.pre_promotion_tree),
    ] {
        let edges = tree.edges();
        if edges
            .iter()
            .any(|&(a, b)| !order.contains(&a) || !order.contains(&b))
        {
            return Err(format!("{name} leaves S ∪ L"));
        }
        let local_edges: Vec<Edge> = edges.iter().map(|&(a, b)| (local(a), local(b))).collect();
        if !is_spanning_tree(order.len(), &local_host, &local_edges) {
            return Err(format!("{name} is not a spanning tree of B(S,L)"));
        }
    }
    let internal = internal_vertices(&rec.bsl_tree.edges());
    if !s.is_subset(&internal) {
        return Err("an S-vertex is a leaf".into());
    }
    if internal.intersection(&l).count() + 1 != s.len() {
        return Err(format!(
            "{} L-vertices internal, |S| = {}",
            internal.intersection(&l).count(),
            s.len()
        ));
    }
    let mut pre_deg: BTreeMap<usize, usize> = BTreeMap::new();
    for (a, b) in rec.pre_promotion_tree.edges() {
        *pre_deg.entry(a).or_default() += 1;
        *pre_deg.entry(b).or_default() += 1;
    }
    if l.iter().any(|v| pre_deg.get(v).copied().unwrap_or(0) > 2) {
        return Err("an L-vertex has degree > 2 before promotion".into());
    }
    let whole = (0..pre.n()).all(|v| s.contains(&v) || l.contains(&v));
    if rec.delta_k != 2 * s.len() as i64 - 2 + i64::from(whole) {
        return Err("delta_k".into());
    }
    Ok(())
}

/// The replacement of `S ∪ L` by `v_S` and pendant `v_L`, computed from
/// scratch: survivors keep their relative order.
fn reference_surgery(pre: &Graph, rec: &ReductionRecord) -> Result<Graph, String> {
    let removed: BTreeSet<usize> = rec.s.iter().chain(&rec.l).copied().collect();
    let survivors: Vec<usize> = (0..pre.n()).filter(|v| !removed.contains(v)).collect();
    let new_id: BTreeMap<usize, usize> =
        survivors.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let v_s = survivors.len();
    let v_l = v_s + 1;
    if (rec.v_s, rec.v_l) != (v_s, v_l) {
        return Err("v_S/v_L ids".into());
    }
    for (old, m) in rec.index_map.iter().enumerate() {
        if *m != new_id.get(&old).copied() {
            return Err(format!("index_map at {old}"));
        }
    }
    let host = edge_set(pre);
    let outside: BTreeSet<usize> = rec
        .s
        .iter()
        .flat_map(|&v| neighbors_in(&host, v))
        .filter(|v| !removed.contains(v))
        .collect();
    if rec.neighbor_map.iter().copied().collect::<BTreeSet<_>>() != outside {
        return Err("neighbor_map".into());
    }
    let mut edges: Vec<Edge> = host
        .iter()
        .filter(|(a, b)| !removed.contains(a) && !removed.contains(b))
        .map(|(a, b)| (new_id[a], new_id[b]))
        .collect();
    edges.extend(outside.iter().map(|u| (new_id[u], v_s)));
    edges.push((v_s, v_l));
    Graph::new(v_l + 1, edges).map_err(|e| e.to_string())
}

/// Replays `trace` from `g`, returning each record with its pre-surgery
/// graph and the final graph.
fn replay(
    g: &Graph,
    trace: &[ReductionRecord],
) -> Result<(Vec<(Graph, ReductionRecord)>, Graph), String> {
    let mut current = g.clone();
    let mut steps = Vec::new();
    for rec in trace {
        let next = reference_surgery(&current, rec)?;
        steps.push((current, rec.clone()));
        current = next;
    }
    Ok((steps, current))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let p = order[rng.gen_range(0..i)];
        edges.insert((p.min(order[i]), p.max(order[i])));
    }
    let max = n * (n - 1) / 2;
    let target = (n.saturating_sub(1) + extra).min(max);
    while edges.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A few hubs joined by a tree, the other vertices each adjacent to one or
/// two hubs. Returns the graph and the non-hub set, which is independent.
fn hub_graph(rng: &mut ChaCha8Rng, n: usize, hubs: usize) -> (Graph, Vec<usize>) {
    let mut edges = BTreeSet::new();
    for h in 1..hubs {
        edges.insert((rng.gen_range(0..h), h));
    }
    for v in hubs..n {
        edges.insert((rng.gen_range(0..hubs), v));
        if hubs > 1 && rng.gen_bool(0.4) {
            edges.insert((rng.gen_range(0..hubs), v));
        }
    }
    (Graph::new(n, edges).unwrap(), (hubs..n).collect())
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

struct Run {
    graph: Graph,
    k: i64,
}

/// Instances for the kernel-size run: n ≤ 60, k ∈ 1..=12, over the three
/// generator families plus hub graphs with fewer than k hubs, which a DFS
/// cannot solve and which therefore go through the reduction.
fn kernel_size_instances() -> Vec<Run> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..500)
        .map(|i| {
            let n = rng.gen_range(5..=60);
            let k = rng.gen_range(1..=12);
            let seed = rng.gen();
            let graph = match i % 4 {
                0 => {
                    let m = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
                    generate(Family::RandomGnm, n, Some(m), seed).unwrap()
                }
                1 => {
                    let m = rng.gen_range(n - 1..=n - 1 + n / 3);
                    generate(Family::TreePlus, n, Some(m), seed).unwrap()
                }
                2 => generate(Family::StarCluster, n, None, seed).unwrap(),
                _ => {
                    let hubs = rng.gen_range(1..=(k as usize).min(n / 3).max(1));
                    hub_graph(&mut rng, n, hubs).0
                }
            };
            Run { graph, k }
        })
        .collect()
}

struct Certificates(Vec<(Graph, ReductionRecord)>);

fn criterion_1(runs: &[Run], certs: &mut Certificates) -> Result<String, String> {
    let (mut kernels, mut solved, mut reductions) = (0, 0, 0);
    for (i, run) in runs.iter().enumerate() {
        let g = &run.graph;
        let r = kernelize(g, run.k).map_err(|e| format!("instance {i}: {e}"))?;
        let (steps, last) = replay(g, &r.trace).map_err(|e| format!("instance {i}: {e}"))?;
        if last != r.graph {
            return Err(format!(
                "instance {i}: trace does not reproduce the reduced graph"
            ));
        }
        let doc = TraceDocument::from_result(g, &r);
        verify_artifacts(g, &doc, &r.graph)
            .map_err(|e| format!("instance {i}: offline replay: {e}"))?;
        reductions += steps.len();
        certs.0.extend(steps);
        match &r.outcome {
            Outcome::Kernel => {
                kernels += 1;
                let nk = r.graph.n() as i64;
                if nk > 3 * run.k || (r.k_prime >= 1 && nk > 3 * r.k_prime) {
                    return Err(format!(
                        "instance {i}: {nk} vertices, k = {}, k' = {}",
                        run.k, r.k_prime
                    ));
                }
            }
            Outcome::Solved(t) | Outcome::TrivialYes(t) => {
                solved += 1;
                let edges = t.edges();
                if !is_spanning_tree(g.n(), &edge_set(g), &edges)
                    || (internal_vertices(&edges).len() as i64) < run.k
                {
                    return Err(format!("instance {i}: invalid witness"));
                }
            }
            Outcome::TrivialNo(_) => {
                if run.k <= g.n() as i64 - 2 {
                    return Err(format!("instance {i}: trivial no with k ≤ n - 2"));
                }
            }
        }
    }
    Ok(format!(
        "{} instances: {kernels} kernels, {solved} solved, {reductions} reductions",
        runs.len()
    ))
}

fn criterion_2(certs: &mut Certificates) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let (mut decisions, mut cross_checked, mut reductions) = (0, 0, 0);
    for i in 0..500 {
        let n = rng.gen_range(1..=12);
        let g = if i % 2 == 0 && n >= 4 {
            let hubs = rng.gen_range(1..=(n / 3).max(1));
            let (g, _) = hub_graph(&mut rng, n, hubs);
            g
        } else {
            let extra = rng.gen_range(0..=n + 2);
            random_connected(&mut rng, n, extra)
        };
        let host = edge_set(&g);
        let opt = opt_internal(&g)
            .map_err(|e| format!("instance {i}: {e}"))?
            .opt;
        if g.edge_count() <= 2 * n + 2 {
            let reference = brute_opt(n, &host.iter().copied().collect::<Vec<_>>());
            if reference != opt {
                return Err(format!(
                    "instance {i}: oracle {opt}, enumeration {reference}"
                ));
            }
            cross_checked += 1;
        }
        for k in 0..=n as i64 {
            let d = decide_pist(&g, k).map_err(|e| format!("instance {i}, k = {k}: {e}"))?;
            decisions += 1;
            if d.answer != (opt as i64 >= k) {
                return Err(format!(
                    "instance {i}, k = {k}: answered {}, opt = {opt}, n = {n}, edges {:?}",
                    d.answer, host
                ));
            }
            if d.answer {
                let edges = d.witness.as_ref().ok_or("yes without witness")?.edges();
                if !is_spanning_tree(n, &host, &edges)
                    || (internal_vertices(&edges).len() as i64) < k
                {
                    return Err(format!("instance {i}, k = {k}: invalid witness"));
                }
            }
            let (steps, _) =
                replay(&g, &d.kernel.trace).map_err(|e| format!("instance {i}, k = {k}: {e}"))?;
            reductions += steps.len();
            certs.0.extend(steps);
        }
    }
    Ok(format!(
        "{decisions} decisions, {cross_checked} optima cross-checked by enumeration, {reductions} reductions"
    ))
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for c in 0..=max + 1 {
            labels.push(c);
            rec(i + 1, n, labels, max.max(c), out);
            labels.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut labels = vec![0];
    rec(1, n, &mut labels, 0, &mut out);
    out
}

fn border_size(edges: &[Vec<usize>], label: &[usize]) -> usize {
    edges
        .iter()
        .filter(|e| e.iter().map(|&v| label[v]).collect::<BTreeSet<_>>().len() >= 2)
        .count()
}

fn criterion_3() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (mut trees, mut deficient) = (0, 0);
    for i in 0..300 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(0..=5);
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let mask = rng.gen_range(1u32..1 << n);
                (0..n).filter(|v| mask >> v & 1 == 1).collect()
            })
            .collect();
        let h = Hypergraph::new(n, edges.clone()).map_err(|e| e.to_string())?;
        let partition_connected = set_partitions(n).iter().all(|label| {
            let parts = label.iter().max().map_or(0, |m| m + 1);
            border_size(&edges, label) + 1 >= parts
        });
        match greedy_hypertree(&h) {
            Some(f) => {
                trees += 1;
                if !partition_connected {
                    return Err(format!(
                        "hypergraph {i}: hypertree found but a partition is deficient"
                    ));
                }
                let ids = f.edge_ids();
                if ids.len() + 1 != n {
                    return Err(format!("hypergraph {i}: hypertree has {} edges", ids.len()));
                }
                for mask in 1u32..1 << ids.len() {
                    let chosen: Vec<usize> = (0..ids.len())
                        .filter(|j| mask >> j & 1 == 1)
                        .map(|j| ids[j])
                        .collect();
                    let union: BTreeSet<usize> = chosen
                        .iter()
                        .flat_map(|&j| edges[j].iter().copied())
                        .collect();
                    if union.len() < chosen.len() + 1 {
                        return Err(format!(
                            "hypergraph {i}: returned edges violate the strong Hall condition"
                        ));
                    }
                }
            }
            None => {
                deficient += 1;
                if partition_connected {
                    return Err(format!(
                        "hypergraph {i}: partition-connected but greedy failed"
                    ));
                }
                let p = deficient_partition(&h).ok_or(format!("hypergraph {i}: no certificate"))?;
                let mut label = vec![usize::MAX; n];
                for (j, part) in p.parts().iter().enumerate() {
                    for &v in part {
                        label[v] = j;
                    }
                }
                if label.contains(&usize::MAX) {
                    return Err(format!(
                        "hypergraph {i}: certificate does not cover all vertices"
                    ));
                }
                if border_size(&edges, &label) + 2 > p.parts().len() {
                    return Err(format!("hypergraph {i}: certificate is not deficient"));
                }
            }
        }
    }
    Ok(format!(
        "300 hypergraphs: {trees} with hypertrees, {deficient} deficient"
    ))
}

fn criterion_4() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut proper = 0;
    for i in 0..300 {
        let nx = rng.gen_range(1..=6);
        let ny = rng.gen_range(2 * nx..=14);
        let xs: Vec<usize> = (0..nx).collect();
        let ys: Vec<usize> = (100..100 + ny).collect();
        let p = rng.gen_range(0.0..0.4);
        let mut edges = BTreeSet::new();
        for &y in &ys {
            // Favor low-index x so some x end up with few private neighbors.
            let first = rng.gen_range(0..nx).min(rng.gen_range(0..nx));
            edges.insert((xs[first], y));
            for &x in &xs {
                if rng.gen_bool(p) {
                    edges.insert((x, y));
                }
            }
        }
        let b =
            BipartiteSubgraph::new(&xs, &ys, edges.iter().copied()).map_err(|e| e.to_string())?;
        let pair = find_expansion_2(&b).map_err(|e| format!("instance {i}: {e}"))?;
        let xp: BTreeSet<usize> = pair.x_prime.iter().copied().collect();
        let yp: BTreeSet<usize> = pair.y_prime.iter().copied().collect();
        if xp.is_empty()
            || yp.is_empty()
            || !xp.iter().all(|x| xs.contains(x))
            || !yp.iter().all(|y| ys.contains(y))
        {
            return Err(format!("instance {i}: bad sides {xp:?} {yp:?}"));
        }
        let n_yp: BTreeSet<usize> = edges
            .iter()
            .filter(|(_, y)| yp.contains(y))
            .map(|&(x, _)| x)
            .collect();
        if n_yp != xp {
            return Err(format!("instance {i}: N(Y') = {n_yp:?} ≠ X' = {xp:?}"));
        }
        let adj = |x: usize| -> BTreeSet<usize> {
            edges.iter().filter(|e| e.0 == x).map(|e| e.1).collect()
        };
        if !expands_twice(&pair.x_prime, &yp, &adj) {
            return Err(format!("instance {i}: X' lacks Y'-expansion 2"));
        }
        if !verify_expansion(&b, &pair, 2).map_err(|e| e.to_string())? {
            return Err(format!("instance {i}: library check disagrees"));
        }
        if xp.len() < nx {
            proper += 1;
        }
    }
    Ok(format!("300 instances, {proper} with X' ≠ X"))
}

fn criterion_5(certs: &Certificates) -> Result<String, String> {
    if certs.0.is_empty() {
        return Err("no certificates were produced".into());
    }
    let mut largest = 0;
    for (i, (pre, rec)) in certs.0.iter().enumerate() {
        check_record(pre, rec).map_err(|e| format!("certificate {i}: {e}"))?;
        largest = largest.max(rec.s.len());
    }
    Ok(format!(
        "{} certificates, largest |S| = {largest}",
        certs.0.len()
    ))
}

fn random_spanning_tree(rng: &mut ChaCha8Rng, g: &Graph) -> Vec<Edge> {
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.shuffle(rng);
    let mut parent: Vec<usize> = (0..g.n()).collect();
    edges
        .into_iter()
        .filter(|&(u, v)| {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
            a != b
        })
        .collect()
}

fn criterion_6() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut gained = 0;
    for i in 0..100 {
        let n = rng.gen_range(4..=10);
        let hubs = rng.gen_range(1..=n / 3);
        let (g, independent) = hub_graph(&mut rng, n, hubs);
        let cert = find_sl(&g, &independent).map_err(|e| format!("triple {i}: {e}"))?;
        let tree_edges = random_spanning_tree(&mut rng, &g);
        let t = mist_kernel::SpanningTree::spanning(&g, &tree_edges).map_err(|e| e.to_string())?;
        let r = rearrange_tree(&g, &t, &cert).map_err(|e| format!("triple {i}: {e}"))?;
        let out = r.edges();
        if !is_spanning_tree(n, &edge_set(&g), &out) {
            return Err(format!("triple {i}: output is not a spanning tree"));
        }
        let before = internal_vertices(&tree_edges);
        let after = internal_vertices(&out);
        if after.len() < before.len() {
            return Err(format!(
                "triple {i}: internal count fell from {} to {}",
                before.len(),
                after.len()
            ));
        }
        if !cert.s.iter().all(|v| after.contains(v)) {
            return Err(format!("triple {i}: an S-vertex is a leaf"));
        }
        if cert.l.iter().filter(|v| after.contains(v)).count() + 1 != cert.s.len() {
            return Err(format!("triple {i}: wrong number of internal L-vertices"));
        }
        if after.len() > before.len() {
            gained += 1;
        }
    }
    Ok(format!("100 triples, {gained} strictly improved"))
}

fn criterion_7() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut yes = 0;
    for i in 0..200 {
        let n = rng.gen_range(1..=8);
        let extra = rng.gen_range(0..=n / 2 + 1);
        let g = random_connected(&mut rng, n, extra);
        let edges: Vec<Edge> = g.edges().collect();
        let expected = has_hamiltonian_path(n, &edges);
        let d = decide_pist(&g, n as i64 - 2).map_err(|e| format!("graph {i}: {e}"))?;
        if d.answer != expected {
            return Err(format!(
                "graph {i}: decided {}, Hamiltonian path {expected}",
                d.answer
            ));
        }
        yes += usize::from(expected);
    }
    Ok(format!("200 graphs, {yes} with Hamiltonian paths"))
}

fn write_artifacts(dir: &PathBuf, runs: &[Run]) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    for (i, run) in runs.iter().enumerate() {
        let r = kernelize(&run.graph, run.k).map_err(|e| e.to_string())?;
        let doc = TraceDocument::from_result(&run.graph, &r);
        std::fs::write(dir.join(format!("{i}.graph")), write_edge_list(&r.graph))
            .map_err(|e| e.to_string())?;
        std::fs::write(dir.join(format!("{i}.json")), doc.to_json()).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn criterion_8() -> Result<String, String> {
    let root = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-determinism");
    let _ = std::fs::remove_dir_all(&root);
    let (a, b) = (root.join("first"), root.join("second"));
    write_artifacts(&a, &kernel_size_instances())?;
    write_artifacts(&b, &kernel_size_instances())?;
    let mut files = 0;
    for entry in std::fs::read_dir(&a).map_err(|e| e.to_string())? {
        let name = entry.map_err(|e| e.to_string())?.file_name();
        let x = std::fs::read(a.join(&name)).map_err(|e| e.to_string())?;
        let y = std::fs::read(b.join(&name)).map_err(|e| e.to_string())?;
        if x != y {
            return Err(format!("{} differs between runs", name.to_string_lossy()));
        }
        files += 1;
    }
    if files != 1000 {
        return Err(format!("expected 1000 files, found {files}"));
    }
    Ok(format!("{files} files byte-identical"))
}

fn criterion_9() -> Result<String, String> {
    let g =
        generate(Family::RandomGnm, 2000, Some(4000), 0x5eed_0009).map_err(|e| e.to_string())?;
    let r = kernelize(&g, 20).map_err(|e| e.to_string())?;
    match &r.outcome {
        Outcome::Solved(t) => {
            let edges = t.edges();
            let internal = internal_vertices(&edges).len();
            if !is_spanning_tree(2000, &edge_set(&g), &edges) || internal < 20 {
                return Err("invalid witness".into());
            }
            Ok(format!("solved by DFS, {internal} internal"))
        }
        Outcome::Kernel if r.graph.n() <= 60 => Ok(format!("kernel with {} vertices", r.graph.n())),
        other => Err(format!("unexpected exit {other:?}")),
    }
}

fn report(
    id: u32,
    name: &str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<String, String>,
) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match result {
        Ok(detail) => match limit {
            Some(l) if elapsed > l => {
                (false, format!("{detail}; exceeded {:.0}s", l.as_secs_f64()))
            }
            _ => (true, detail),
        },
        Err(e) => (false, e),
    };
    println!(
        "criterion {id} [{}] {name}: {detail} ({:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let runs = kernel_size_instances();
    let mut certs = Certificates(Vec::new());
    let results = [
        report(1, "kernel size", Some(secs(60)), || {
            criterion_1(&runs, &mut certs)
        }),
        report(2, "kernel equivalence", Some(secs(300)), || {
            criterion_2(&mut certs)
        }),
        report(
            3,
            "hypertree iff partition-connected",
            Some(secs(60)),
            criterion_3,
        ),
        report(4, "expansion pairs", Some(secs(30)), criterion_4),
        report(5, "certificate suite", None, || criterion_5(&certs)),
        report(6, "rearrangement monotonicity", None, criterion_6),
        report(7, "Hamiltonian-path boundary", None, criterion_7),
        report(8, "determinism", None, criterion_8),
        report(9, "desk-scale performance", Some(secs(120)), criterion_9),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
