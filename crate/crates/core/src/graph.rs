//! Undirected simple graphs, spanning trees over vertex subsets, and the
//! bipartite views `B(X, Y)` used throughout the reduction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("root {0} is not a vertex")]
    BadRoot(Vertex),
    #[error("vertex {0} appears on both sides of the bipartition")]
    OverlappingSides(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree edge ({0}, {1}) has an endpoint outside the vertex set")]
    ForeignEndpoint(Vertex, Vertex),
    #[error("tree edge ({0}, {1}) is a self-loop or repeated")]
    BadEdge(Vertex, Vertex),
    #[error("expected {expected} edges for a spanning tree, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge set contains a cycle through ({0}, {1})")]
    Cycle(Vertex, Vertex),
    #[error("tree edge ({0}, {1}) is not an edge of the host graph")]
    NotInHost(Vertex, Vertex),
    #[error("tree does not span the host's {0} vertices")]
    NotSpanning(usize),
}

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `N(X)`: vertices outside `set` adjacent to some vertex of `set`.
    pub fn neighborhood_of_set(&self, set: &[Vertex]) -> BTreeSet<Vertex> {
        let inside: BTreeSet<Vertex> = set.iter().copied().collect();
        set.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|w| !inside.contains(w))
            .collect()
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        let inside: BTreeSet<Vertex> = set.iter().copied().collect();
        set.iter()
            .all(|&v| v < self.n() && self.adj[v].iter().all(|w| !inside.contains(w)))
    }
}

/// True iff every vertex is reachable from vertex 0. Vacuously true for
/// graphs with fewer than two vertices.
pub fn is_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == g.n()
}

/// A tree spanning an explicit vertex set. The vertex set need not be
/// `0..n`: trees of `B(S, L)` live on original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    root: Option<Vertex>,
}

impl SpanningTree {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, TreeError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        let index: BTreeMap<Vertex, usize> = adj.keys().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = DisjointSets::new(adj.len());
        let mut found = 0;
        for (u, v) in edges {
            let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) else {
                return Err(TreeError::ForeignEndpoint(u, v));
            };
            if u == v || adj[&u].contains(&v) {
                return Err(TreeError::BadEdge(u, v));
            }
            if !dsu.union(iu, iv) {
                return Err(TreeError::Cycle(u.min(v), u.max(v)));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
            found += 1;
        }
        let expected = adj.len().saturating_sub(1);
        if found != expected {
            return Err(TreeError::EdgeCount { expected, found });
        }
        Ok(SpanningTree { adj, root: None })
    }

    /// Builds a spanning tree of `host` (vertex set `0..host.n()`), checking
    /// that every edge belongs to the host.
    pub fn spanning(host: &Graph, edges: &[(Vertex, Vertex)]) -> Result<Self, TreeError> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(TreeError::NotInHost(u, v));
        }
        Self::new(0..host.n(), edges.iter().copied())
    }

    pub fn with_root(mut self, root: Vertex) -> Self {
        self.root = Some(root);
        self
    }

    pub fn root(&self) -> Option<Vertex> {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .flat_map(|(&u, s)| s.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_internal(&self, v: Vertex) -> bool {
        self.degree(v) >= 2
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_internal(v)).collect()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// `i_T(X)`: number of vertices of `subset` (all vertices when `None`)
    /// that are internal in the tree.
    pub fn internal_count(&self, subset: Option<&[Vertex]>) -> usize {
        match subset {
            Some(xs) => xs.iter().filter(|&&v| self.is_internal(v)).count(),
            None => self.adj.values().filter(|s| s.len() >= 2).count(),
        }
    }

    /// Checks that this tree spans exactly `0..host.n()` using host edges.
    pub fn check_spans(&self, host: &Graph) -> Result<(), TreeError> {
        if self.adj.len() != host.n() || self.adj.keys().enumerate().any(|(i, &v)| i != v) {
            return Err(TreeError::NotSpanning(host.n()));
        }
        match self
            .edges()
            .into_iter()
            .find(|&(u, v)| !host.has_edge(u, v))
        {
            Some((u, v)) => Err(TreeError::NotInHost(u, v)),
            None => Ok(()),
        }
    }
}

pub fn internal_count(t: &SpanningTree, subset: Option<&[Vertex]>) -> usize {
    t.internal_count(subset)
}

/// Depth-first spanning tree from `root`, visiting neighbors in ascending
/// index order.
pub fn dfs_tree(g: &Graph, root: Vertex) -> Result<SpanningTree, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    if root >= g.n() {
        return Err(GraphError::BadRoot(root));
    }
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::with_capacity(g.n() - 1);
    // Stack of (vertex, next neighbor position).
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some(top) = stack.last_mut() {
        let (v, pos) = *top;
        match g.neighbors(v)[pos..].iter().position(|&w| !seen[w]) {
            Some(off) => {
                let w = g.neighbors(v)[pos + off];
                top.1 = pos + off + 1;
                seen[w] = true;
                edges.push((v, w));
                stack.push((w, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    if edges.len() + 1 != g.n() {
        return Err(GraphError::Disconnected);
    }
    let tree = SpanningTree::new(0..g.n(), edges).expect("DFS edges form a spanning tree");
    debug_assert!(tree.check_spans(g).is_ok());
    Ok(tree.with_root(root))
}

/// Leaves of a DFS tree other than its root. Non-tree edges of a DFS tree
/// join ancestor/descendant pairs, so these leaves are pairwise nonadjacent.
pub fn dfs_leaf_independent_set(_g: &Graph, t: &SpanningTree) -> Vec<Vertex> {
    t.leaves()
        .into_iter()
        .filter(|&v| Some(v) != t.root())
        .collect()
}

/// Which side of a [`BipartiteSubgraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Bipartite graph between two disjoint labelled vertex sets. Vertices are
/// addressed locally (`0..x.len()`, `0..y.len()`); labels map back to host ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSubgraph {
    x: Vec<Vertex>,
    y: Vec<Vertex>,
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

impl BipartiteSubgraph {
    /// Builds a bipartite graph from labelled sides and `(x_label, y_label)`
    /// edges. Sides are sorted; labels must be distinct across sides.
    pub fn new(
        x: &[Vertex],
        y: &[Vertex],
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut x = x.to_vec();
        let mut y = y.to_vec();
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        if let Some(&v) = x.iter().find(|v| y.binary_search(v).is_ok()) {
            return Err(GraphError::OverlappingSides(v));
        }
        let mut x_adj = vec![Vec::new(); x.len()];
        let mut y_adj = vec![Vec::new(); y.len()];
        for (a, b) in edges {
            let (Ok(i), Ok(j)) = (x.binary_search(&a), y.binary_search(&b)) else {
                return Err(GraphError::VertexOutOfRange(a, b, x.len() + y.len()));
            };
            x_adj[i].push(j);
            y_adj[j].push(i);
        }
        for list in x_adj.iter_mut().chain(y_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(BipartiteSubgraph { x, y, x_adj, y_adj })
    }

    pub fn x(&self) -> &[Vertex] {
        &self.x
    }

    pub fn y(&self) -> &[Vertex] {
        &self.y
    }

    pub fn x_neighbors(&self, i: usize) -> &[usize] {
        &self.x_adj[i]
    }

    pub fn y_neighbors(&self, j: usize) -> &[usize] {
        &self.y_adj[j]
    }

    pub fn x_index(&self, label: Vertex) -> Option<usize> {
        self.x.binary_search(&label).ok()
    }

    pub fn y_index(&self, label: Vertex) -> Option<usize> {
        self.y.binary_search(&label).ok()
    }

    pub fn edge_count(&self) -> usize {
        self.x_adj.iter().map(Vec::len).sum()
    }

    /// Edges as `(x_label, y_label)` pairs.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.x_adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&j| (self.x[i], self.y[j])))
            .collect()
    }

    pub fn side(&self, side: Side) -> &[Vertex] {
        match side {
            Side::X => &self.x,
            Side::Y => &self.y,
        }
    }

    /// Restriction to the given labelled subsets.
    pub fn restrict(&self, x: &[Vertex], y: &[Vertex]) -> Self {
        let xs: BTreeSet<Vertex> = x.iter().copied().collect();
        let ys: BTreeSet<Vertex> = y.iter().copied().collect();
        let edges = self
            .edges()
            .into_iter()
            .filter(|(a, b)| xs.contains(a) && ys.contains(b));
        BipartiteSubgraph::new(x, y, edges).expect("restriction of a valid bipartite graph")
    }
}

/// `B(X, Y)`: the edges of `g` with one endpoint in each of the disjoint sets.
pub fn bipartite_between(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
) -> Result<BipartiteSubgraph, GraphError> {
    if let Some(&v) = x.iter().chain(y).find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange(v, v, g.n()));
    }
    let ys: BTreeSet<Vertex> = y.iter().copied().collect();
    if let Some(&v) = x.iter().find(|v| ys.contains(v)) {
        return Err(GraphError::OverlappingSides(v));
    }
    let edges = x.iter().flat_map(|&u| {
        g.neighbors(u)
            .iter()
            .filter(|w| ys.contains(w))
            .map(move |&w| (u, w))
    });
    BipartiteSubgraph::new(x, y, edges)
}

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    /// The smaller representative wins so classes are labelled by their
    /// minimum element.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Mutable forest over an explicit vertex set, used while rearranging trees.
#[derive(Debug, Clone, Default)]
pub(crate) struct Forest {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Forest {
    pub(crate) fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Forest {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub(crate) fn from_tree(t: &SpanningTree) -> Self {
        Forest { adj: t.adj.clone() }
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let a = self.adj.get_mut(&u).is_some_and(|s| s.remove(&v));
        let b = self.adj.get_mut(&v).is_some_and(|s| s.remove(&u));
        a && b
    }

    pub(crate) fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub(crate) fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Vertex path from `from` to `to`, inclusive, if they share a component.
    pub(crate) fn path(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        prev.insert(from, from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in self.adj.get(&v).into_iter().flatten() {
                if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Component label (smallest vertex of the component) for every vertex.
    pub(crate) fn components(&self) -> BTreeMap<Vertex, Vertex> {
        let mut label = BTreeMap::new();
        for &start in self.adj.keys() {
            if label.contains_key(&start) {
                continue;
            }
            label.insert(start, start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[&v] {
                    if let std::collections::btree_map::Entry::Vacant(e) = label.entry(w) {
                        e.insert(start);
                        stack.push(w);
                    }
                }
            }
        }
        label
    }

    pub(crate) fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .flat_map(|(&u, s)| s.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub(crate) fn into_tree(self) -> Result<SpanningTree, TreeError> {
        let edges = self.edges();
        SpanningTree::new(self.adj.into_keys(), edges)
    }
}
