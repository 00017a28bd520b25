//! Separations, clique and star cutsets, and the star-to-clique reduction.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A partition `(A, C, B)` of `V(G)` with `A` anticomplete to `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Separation {
    pub a: VertexSet,
    pub c: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn new(g: &Graph, a: VertexSet, c: VertexSet, b: VertexSet) -> Result<Self> {
        let s = Separation { a, c, b };
        s.check(g)?;
        Ok(s)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let Separation { a, c, b } = *self;
        if a.intersects(b) || a.intersects(c) || b.intersects(c) {
            return Err(Error::InvalidSeparation("parts are not disjoint".into()));
        }
        if a.union(b).union(c) != g.vertices() {
            return Err(Error::InvalidSeparation("parts do not cover V(G)".into()));
        }
        if g.neighborhood(a).intersects(b) {
            return Err(Error::InvalidSeparation(format!("{a} is not anticomplete to {b}")));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    /// Both sides nonempty, so that `C` is a cutset.
    pub fn is_proper(&self) -> bool {
        !self.a.is_empty() && !self.b.is_empty()
    }
}

/// Splits `G ∖ c` into the component containing its smallest vertex and
/// the rest.
fn split(g: &Graph, c: VertexSet) -> Option<Separation> {
    let rest = g.vertices().difference(c);
    let first = rest.min()?;
    let a = g.component_of(rest, first);
    let b = rest.difference(a);
    (!b.is_empty()).then_some(Separation { a, c, b })
}

/// True iff no path from `d1` to `d2` avoids `removed`.
pub fn separates(g: &Graph, removed: VertexSet, d1: VertexSet, d2: VertexSet) -> bool {
    let rest = g.vertices().difference(removed);
    let mut reach = VertexSet::EMPTY;
    for v in d1.intersection(rest) {
        if !reach.contains(v) {
            reach = reach.union(g.component_of(rest, v));
        }
    }
    !reach.intersects(d2)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// A separation whose middle is a clique, with both sides nonempty.
///
/// Cliques are scanned by increasing size and then lexicographically, so
/// the returned cutset is a smallest clique cutset; every inclusion-minimal
/// clique cutset is a minimal separator, so this covers the minimal
/// separators that are cliques. `A` is the component of `G ∖ C` containing
/// the smallest remaining vertex.
pub fn find_clique_cutset(g: &Graph, budget: &mut Budget) -> Result<Option<Separation>> {
    require_connected(g)?;
    if g.is_complete() {
        return Ok(None);
    }
    let mut level: Vec<VertexSet> = vec![VertexSet::EMPTY];
    while !level.is_empty() {
        let mut next = Vec::new();
        for &k in &level {
            let common = k.iter().fold(g.vertices(), |acc, v| acc.intersection(g.neighbors(v)));
            let above = match k.max() {
                Some(m) => common.difference(VertexSet::full(m + 1)),
                None => common,
            };
            for v in above {
                budget.tick()?;
                next.push(k.with(v));
            }
        }
        next.sort_by(|a, b| a.lex_cmp(*b));
        for &k in &next {
            if let Some(sep) = split(g, k) {
                return Ok(Some(sep));
            }
        }
        level = next;
    }
    Ok(None)
}

/// A proper star separation and its center.
///
/// For a center `v`, let `R = V(G) ∖ N[v]`. A star cutset centered at `v`
/// exists iff one of the following holds, and the returned separation is
/// the one listed:
/// - `R = ∅` and `N(v)` has non-adjacent `x < y`: `C = N[v] ∖ {x, y}`;
/// - `G[R]` is disconnected: `C = N[v]`;
/// - some `u ∈ N(v)` has no neighbour in a nonempty connected `R`: with `U`
///   the set of all such vertices, `(U, N[v] ∖ U, R)`.
///
/// Centers are tried in ascending order.
pub fn find_star_cutset(g: &Graph) -> Result<Option<(Separation, usize)>> {
    require_connected(g)?;
    for v in g.vertices() {
        let closed = g.closed_neighbors(v);
        let r = g.vertices().difference(closed);
        if r.is_empty() {
            let nv = g.neighbors(v);
            for x in nv {
                if let Some(y) = nv.difference(g.closed_neighbors(x)).difference(VertexSet::full(x + 1)).min() {
                    let sep = Separation {
                        a: VertexSet::singleton(x),
                        c: closed.without(x).without(y),
                        b: VertexSet::singleton(y),
                    };
                    return Ok(Some((sep, v)));
                }
            }
            continue;
        }
        if let Some(sep) = split(g, closed) {
            return Ok(Some((sep, v)));
        }
        let loose: VertexSet = g.neighbors(v).iter().filter(|&u| !g.neighbors(u).intersects(r)).collect();
        if !loose.is_empty() {
            let sep = Separation { a: loose, c: closed.difference(loose), b: r };
            return Ok(Some((sep, v)));
        }
    }
    Ok(None)
}

/// Replaces a separation whose middle is covered by the closed
/// neighbourhoods of `centers` with cliques `X_i ⊆ C`, one per center, such
/// that every `D1`–`D2` path meets their union.
///
/// With `N1 = N(D1)`, `D2'` the component of `G ∖ (N1 ∪ centers)` holding
/// `D2`, and `X = N(D2') ∪ centers`, the result is
/// `X_i = ((X ∖ centers) ∩ N(v_i)) ∪ {v_i}`, which covers `X`. Two
/// non-adjacent vertices of `X_i ∖ {v_i}` both lie in `N(D1) ∩ N(D2')` and
/// close a hole through `D1` and `D2'` in which `v_i` has two non-adjacent
/// neighbours, so in a sparse graph each `X_i` is a clique; otherwise
/// [`Error::NotSparse`] reports the offending set.
///
/// Other centers are kept out of `X_i`: a center need not lie in `N(D1)`,
/// and `X ∩ N[v_i]` can fail to be a clique when it contains one.
pub fn star_to_cliques(
    g: &Graph,
    sep: &Separation,
    centers: &[usize],
    d1: VertexSet,
    d2: VertexSet,
) -> Result<Vec<VertexSet>> {
    sep.check(g)?;
    if !sep.is_proper() {
        return Err(Error::InvalidSeparation("A or B is empty".into()));
    }
    let cs: VertexSet = centers.iter().collect();
    if !cs.is_subset(sep.c) {
        return Err(Error::InvalidSeparation(format!("centers {cs} are not all in C = {}", sep.c)));
    }
    if !sep.c.is_subset(g.closed_neighborhood(cs)) {
        return Err(Error::InvalidSeparation(format!(
            "C = {} is not covered by the closed neighbourhoods of {cs}",
            sep.c
        )));
    }
    if d1.is_empty() || !g.components(sep.a).contains(&d1) {
        return Err(Error::InvalidSeparation(format!("{d1} is not a component of A")));
    }
    if d2.is_empty() || !g.components(sep.b).contains(&d2) {
        return Err(Error::InvalidSeparation(format!("{d2} is not a component of B")));
    }
    let n1 = g.neighborhood(d1);
    let rest = g.vertices().difference(n1.union(cs));
    let d2_prime = g.component_of(rest, d2.min().expect("nonempty"));
    let x = g.neighborhood(d2_prime).union(cs);
    let mut out = Vec::with_capacity(centers.len());
    for &v in centers {
        let xi = x.difference(cs).intersection(g.neighbors(v)).with(v);
        if !g.is_clique(xi) {
            return Err(Error::NotSparse(xi));
        }
        out.push(xi);
    }
    Ok(out)
}
