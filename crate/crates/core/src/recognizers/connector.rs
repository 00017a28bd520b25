//! Minimal connected subgraphs attaching to three terminals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{induced_path, Graph, Path};
use crate::vset::VertexSet;

/// Shape of an inclusion-minimal connector `H`. Terminal indices are
/// positions in the `terminals` array passed to [`minimal_connector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum ConnectorOutcome {
    /// `H ∪ {x_i, x_j}` induces a path from `x_i` to `x_j` (a hole through
    /// the edge `x_i x_j` when they are adjacent), and `x_k` has two
    /// non-adjacent neighbours in `H` or exactly two, adjacent ones.
    PathOrHole { i: usize, j: usize, k: usize, sequence: Vec<usize> },
    /// Paths from a centre `a ∈ H` to each terminal, otherwise disjoint and
    /// anticomplete apart from edges between terminals.
    Claw { center: usize, paths: [Path; 3] },
    /// A triangle `a_1 a_2 a_3` in `H` with disjoint anticomplete paths
    /// `a_i → x_i`, apart from the triangle and terminal edges.
    Triangle { triangle: [usize; 3], paths: [Path; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connector {
    pub terminals: [usize; 3],
    pub h: VertexSet,
    pub outcome: ConnectorOutcome,
}

fn sees_all(g: &Graph, h: VertexSet, x: &[usize; 3]) -> bool {
    x.iter().all(|&t| g.neighbors(t).intersects(h))
}

fn is_connector(g: &Graph, h: VertexSet, x: &[usize; 3]) -> bool {
    !h.is_empty() && g.is_connected_set(h) && sees_all(g, h, x)
}

/// Shrinks the first component of `G ∖ {x_1, x_2, x_3}` that sees all three
/// terminals by deleting vertices in ascending id order while the result
/// stays connected and keeps a neighbour of every terminal, repeating
/// passes until no vertex can be deleted. The result is then classified.
pub fn minimal_connector(g: &Graph, terminals: [usize; 3]) -> Result<Connector> {
    for &t in &terminals {
        if t >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: t, n: g.n() });
        }
    }
    let xs: VertexSet = terminals.iter().collect();
    if xs.len() != 3 {
        return Err(Error::InvalidParameters(format!(
            "terminals {terminals:?} are not distinct"
        )));
    }
    let mut h = g
        .components(g.vertices().difference(xs))
        .into_iter()
        .find(|&c| sees_all(g, c, &terminals))
        .ok_or(Error::NoConnector)?;
    loop {
        let mut changed = false;
        for v in h {
            let smaller = h.without(v);
            if is_connector(g, smaller, &terminals) {
                h = smaller;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let outcome = classify(g, h, &terminals).ok_or_else(|| {
        Error::NotFound(format!("classification of minimal connector {h} for {terminals:?}"))
    })?;
    Ok(Connector { terminals, h, outcome })
}

/// True iff `h` is inclusion-minimal among connectors for `terminals`.
pub fn is_minimal_connector(g: &Graph, h: VertexSet, terminals: &[usize; 3]) -> bool {
    is_connector(g, h, terminals) && h.iter().all(|v| !is_connector(g, h.without(v), terminals))
}

const PAIRS: [(usize, usize, usize); 3] = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];

fn classify(g: &Graph, h: VertexSet, x: &[usize; 3]) -> Option<ConnectorOutcome> {
    classify_path(g, h, x)
        .or_else(|| classify_claw(g, h, x))
        .or_else(|| classify_triangle(g, h, x))
}

fn classify_path(g: &Graph, h: VertexSet, x: &[usize; 3]) -> Option<ConnectorOutcome> {
    for (i, j, k) in PAIRS {
        let (xi, xj) = (x[i], x[j]);
        let all = h.with(xi).with(xj);
        // G[all] minus the edge x_i x_j must be an induced path x_i .. x_j.
        let terminal_edge = g.has_edge(xi, xj);
        let degree = |v: usize| {
            let d = g.neighbors(v).intersection(all).len();
            d - usize::from(terminal_edge && (v == xi || v == xj))
        };
        if degree(xi) != 1 || degree(xj) != 1 || h.iter().any(|v| degree(v) != 2) {
            continue;
        }
        if !g.is_connected_set(all) {
            continue;
        }
        let m = g.edges_within(all) - usize::from(terminal_edge);
        if m != all.len() - 1 {
            continue;
        }
        if terminal_edge && all.len() < 4 {
            continue;
        }
        let nk = g.neighbors(x[k]).intersection(h);
        let nonadjacent = nk.iter().any(|u| !nk.without(u).is_subset(g.neighbors(u)));
        let two_adjacent = nk.len() == 2 && g.is_clique(nk);
        if !(nonadjacent || two_adjacent) {
            continue;
        }
        let sequence = walk(g, xi, xj, all);
        return Some(ConnectorOutcome::PathOrHole { i, j, k, sequence });
    }
    None
}

/// Walks the path from `s` to `t` in `G[within]`, ignoring the edge `st`.
fn walk(g: &Graph, s: usize, t: usize, within: VertexSet) -> Vec<usize> {
    let mut seq = vec![s];
    let mut prev = usize::MAX;
    let mut cur = s;
    while cur != t {
        let next = g
            .neighbors(cur)
            .intersection(within)
            .iter()
            .find(|&v| v != prev && !(cur == s && v == t))
            .expect("path is connected");
        prev = cur;
        cur = next;
        seq.push(cur);
    }
    seq
}

fn paths_from(g: &Graph, starts: [usize; 3], x: &[usize; 3], h: VertexSet, shared: VertexSet) -> Option<[Path; 3]> {
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let others: VertexSet = (0..3).filter(|&j| j != i).map(|j| starts[j]).collect();
        let allowed = h.difference(others.difference(VertexSet::singleton(starts[i]))).with(x[i]).union(shared);
        out.push(induced_path(g, starts[i], x[i], allowed)?);
    }
    Some([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Checks the disjointness, coverage and cross-edge conditions shared by
/// the claw and triangle outcomes. `shared` is removed from every path
/// before comparing; `allowed_cross` lists permitted edges between paths.
fn check_paths(
    g: &Graph,
    h: VertexSet,
    x: &[usize; 3],
    paths: &[Path; 3],
    shared: VertexSet,
    allowed_cross: &[(usize, usize)],
) -> bool {
    let xs: VertexSet = x.iter().collect();
    let union = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()));
    if union.difference(xs) != h {
        return false;
    }
    let parts: Vec<VertexSet> = paths.iter().map(|p| p.vertex_set().difference(shared)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if parts[i].intersects(parts[j]) {
                return false;
            }
            for u in parts[i] {
                for v in g.neighbors(u).intersection(parts[j]) {
                    let ok = allowed_cross
                        .iter()
                        .any(|&(a, b)| (a == u && b == v) || (a == v && b == u));
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn terminal_edges(g: &Graph, x: &[usize; 3]) -> Vec<(usize, usize)> {
    PAIRS
        .iter()
        .filter(|&&(i, j, _)| g.has_edge(x[i], x[j]))
        .map(|&(i, j, _)| (x[i], x[j]))
        .collect()
}

fn classify_claw(g: &Graph, h: VertexSet, x: &[usize; 3]) -> Option<ConnectorOutcome> {
    let cross = terminal_edges(g, x);
    for a in h {
        let starts = [a, a, a];
        let Some(paths) = paths_from(g, starts, x, h, VertexSet::singleton(a)) else {
            continue;
        };
        if check_paths(g, h, x, &paths, VertexSet::singleton(a), &cross) {
            return Some(ConnectorOutcome::Claw { center: a, paths });
        }
    }
    None
}

fn classify_triangle(g: &Graph, h: VertexSet, x: &[usize; 3]) -> Option<ConnectorOutcome> {
    let base = terminal_edges(g, x);
    for (u, v) in g.edges().filter(|&(u, v)| h.contains(u) && h.contains(v)) {
        for w in g.neighbors(u).intersection(g.neighbors(v)).intersection(h) {
            if w <= v {
                continue;
            }
            let tri = [u, v, w];
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let starts = [tri[perm[0]], tri[perm[1]], tri[perm[2]]];
                let Some(paths) = paths_from(g, starts, x, h, VertexSet::EMPTY) else {
                    continue;
                };
                let mut cross = base.clone();
                cross.extend([(u, v), (u, w), (v, w)]);
                if check_paths(g, h, x, &paths, VertexSet::EMPTY, &cross) {
                    return Some(ConnectorOutcome::Triangle { triangle: starts, paths });
                }
            }
        }
    }
    None
}
