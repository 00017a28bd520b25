//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, symmetrising them. Used by
    /// internal constructions that already guarantee simplicity.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let mut rows = adj;
        for u in 0..n {
            rows[u].remove(u);
            for v in rows[u].iter().collect::<Vec<_>>() {
                rows[v].insert(u);
            }
        }
        Graph { adj: rows }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N(X)`: vertices outside `X` with a neighbour in `X`.
    pub fn neighborhood(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x {
            out = out.union(self.adj[v]);
        }
        out.difference(x)
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.neighborhood(x).union(x)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        x.iter()
            .map(|v| self.adj[v].intersection(x).len())
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter()
            .all(|v| x.without(v).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// `G[X]` with vertices renumbered in ascending order of their ids in
    /// `G`; the second component maps new ids back to old ones.
    pub fn induced_subgraph(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = x.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(x)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        (Graph { adj }, map)
    }

    /// The graph with vertex `v` relabelled `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// The component of `G[within]` containing `v`.
    pub fn component_of(&self, within: VertexSet, v: usize) -> VertexSet {
        debug_assert!(within.contains(v));
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            frontier = next.intersection(within).difference(comp);
            comp = comp.union(frontier);
        }
        comp
    }

    /// The components of `G[x]`, ordered by their minimum vertex.
    pub fn components(&self, x: VertexSet) -> Vec<VertexSet> {
        let mut rest = x;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(rest, v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected_set(&self, x: VertexSet) -> bool {
        match x.min() {
            None => true,
            Some(v) => self.component_of(x, v) == x,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// BFS distances from `sources` inside `G[within]`; `usize::MAX` marks
    /// unreachable vertices.
    pub fn distances(&self, sources: VertexSet, within: VertexSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in sources.intersection(within) {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].intersection(within) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Partition of `x` into the vertex sets of the components of `G[x]`,
/// ordered by minimum vertex id.
pub fn components(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    g.components(x)
}

/// True iff no edge joins `x` and `y`.
pub fn is_anticomplete(g: &Graph, x: VertexSet, y: VertexSet) -> Result<bool> {
    let overlap = x.intersection(y);
    if !overlap.is_empty() {
        return Err(Error::OverlappingSets(overlap));
    }
    Ok(g.neighborhood(x).is_disjoint(y))
}

/// An induced path `p_1 - ... - p_k` of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Path(Vec<usize>);

impl Path {
    /// Validates that `vertices` is an induced path of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty vertex list".into()));
        }
        let set: VertexSet = vertices.iter().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidPath(format!("repeated vertex in {vertices:?}")));
        }
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if g.has_edge(u, v) != (j == i + 1) {
                    return Err(Error::InvalidPath(format!(
                        "{vertices:?} is not an induced path ({u},{v})"
                    )));
                }
            }
        }
        Ok(Path(vertices))
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// `P*`: the path without its ends.
    pub fn interior(&self) -> VertexSet {
        if self.0.len() <= 2 {
            VertexSet::EMPTY
        } else {
            self.0[1..self.0.len() - 1].iter().collect()
        }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_induced_in(&self, g: &Graph) -> bool {
        Path::new(g, self.0.clone()).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// A shortest path from `s` to `t` in `G[allowed]`, choosing the
/// lexicographically smallest vertex sequence among shortest ones.
/// Shortest paths are always induced.
pub fn induced_path(g: &Graph, s: usize, t: usize, allowed: VertexSet) -> Option<Path> {
    if !allowed.contains(s) || !allowed.contains(t) {
        return None;
    }
    let dist = g.distances(VertexSet::singleton(t), allowed);
    if dist[s] == usize::MAX {
        return None;
    }
    let mut path = vec![s];
    let mut cur = s;
    while cur != t {
        let d = dist[cur];
        cur = g
            .neighbors(cur)
            .intersection(allowed)
            .iter()
            .find(|&v| dist[v] + 1 == d)
            .expect("BFS layers are consistent");
        path.push(cur);
    }
    Some(Path::new_unchecked(path))
}

/// All cliques with between one and `max_size` vertices, ordered by size and
/// then lexicographically.
pub fn enumerate_cliques(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); max_size + 1];
    fn extend(
        g: &Graph,
        clique: VertexSet,
        candidates: VertexSet,
        max_size: usize,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        out[clique.len()].push(clique);
        if clique.len() == max_size {
            return;
        }
        for v in candidates {
            // only extend with larger ids so each clique is produced once
            let rest = candidates
                .intersection(g.neighbors(v))
                .difference(VertexSet::full(v + 1));
            extend(g, clique.with(v), rest, max_size, out);
        }
    }
    if max_size == 0 {
        return Vec::new();
    }
    for v in 0..g.n() {
        let cand = g.neighbors(v).difference(VertexSet::full(v + 1));
        extend(g, VertexSet::singleton(v), cand, max_size, &mut by_size);
    }
    let mut out = Vec::new();
    for mut level in by_size {
        level.sort_by(|a, b| a.lex_cmp(*b));
        out.extend(level);
    }
    out
}

/// True iff `G` has no clique on `t + 1` vertices.
pub fn clique_number_at_most(g: &Graph, t: usize) -> bool {
    fn has_clique(g: &Graph, candidates: VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        for v in candidates {
            let rest = candidates
                .intersection(g.neighbors(v))
                .difference(VertexSet::full(v + 1));
            if has_clique(g, rest, need - 1) {
                return true;
            }
        }
        false
    }
    !has_clique(g, g.vertices(), t + 1)
}

/// The size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&t| clique_number_at_most(g, t))
        .unwrap_or(g.n())
}
