//! Hole enumeration.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// An induced cycle of length at least four, stored in canonical form: the
/// smallest vertex first, followed by its smaller cycle neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hole(Vec<usize>);

impl Hole {
    /// Validates and canonicalises a cyclic vertex sequence.
    pub fn new(g: &Graph, cycle: Vec<usize>) -> Result<Self> {
        let k = cycle.len();
        if k < 4 {
            return Err(Error::InvalidPath(format!("hole {cycle:?} has fewer than 4 vertices")));
        }
        let set: VertexSet = cycle.iter().collect();
        if set.len() != k {
            return Err(Error::InvalidPath(format!("repeated vertex in {cycle:?}")));
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(cycle[i], cycle[j]) != consecutive {
                    return Err(Error::InvalidPath(format!("{cycle:?} is not an induced cycle")));
                }
            }
        }
        Ok(Self::canonical(cycle))
    }

    fn canonical(cycle: Vec<usize>) -> Self {
        let k = cycle.len();
        let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
        let next = cycle[(start + 1) % k];
        let prev = cycle[(start + k - 1) % k];
        let out = if next < prev {
            (0..k).map(|i| cycle[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| cycle[(start + k - i) % k]).collect()
        };
        Hole(out)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `u` and `v` are consecutive on the hole.
    pub fn are_consecutive(&self, u: usize, v: usize) -> bool {
        let k = self.0.len();
        (0..k).any(|i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a == u && b == v) || (a == v && b == u)
        })
    }
}

/// Calls `visit` once for every hole of length at most `max_length`
/// (unbounded when `None`), in canonical form. Stops early when `visit`
/// breaks.
///
/// Each hole is grown as an induced path from its minimum vertex `s`
/// through larger vertices only, and closed when the orientation puts the
/// smaller neighbour of `s` second.
pub fn for_each_hole<F>(
    g: &Graph,
    max_length: Option<usize>,
    budget: &mut Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let max_len = max_length.unwrap_or(usize::MAX);
    if max_len < 4 {
        return Ok(ControlFlow::Continue(()));
    }
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let allowed = g.vertices().difference(VertexSet::full(s + 1));
        let ns = g.neighbors(s).intersection(allowed);
        for p1 in ns {
            path.clear();
            path.push(s);
            path.push(p1);
            if extend(g, allowed, ns, VertexSet::EMPTY, &mut path, max_len, budget, &mut visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// `path` is `s, p_1, ..., p_{k-1}`; `blocked` is the union of the closed
/// neighbourhoods of `p_1 .. p_{k-2}`.
#[allow(clippy::too_many_arguments)]
fn extend<F>(
    g: &Graph,
    allowed: VertexSet,
    ns: VertexSet,
    blocked: VertexSet,
    path: &mut Vec<usize>,
    max_len: usize,
    budget: &mut Budget,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    let k = path.len();
    let cand = g.neighbors(last).intersection(allowed).difference(blocked);
    for x in cand {
        budget.tick()?;
        if ns.contains(x) {
            if k >= 3 && x > path[1] && k < max_len {
                path.push(x);
                let flow = visit(path);
                path.pop();
                if flow.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        } else if k + 2 <= max_len {
            path.push(x);
            let next_blocked = blocked.union(g.closed_neighbors(last));
            let flow = extend(g, allowed, ns, next_blocked, path, max_len, budget, visit)?;
            path.pop();
            if flow.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All holes of length at most `max_length`, sorted by length and then
/// lexicographically.
pub fn enumerate_holes(g: &Graph, max_length: Option<usize>, budget: &mut Budget) -> Result<Vec<Hole>> {
    let mut out = Vec::new();
    let _ = for_each_hole(g, max_length, budget, |h| {
        out.push(Hole(h.to_vec()));
        ControlFlow::Continue(())
    })?;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
