//! Canonical two-clique separations and the proper/active/non-crossing
//! relations between them.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::cutsets::separation::Separation;
use crate::error::{Error, Result};
use crate::graph::{enumerate_cliques, Graph};
use crate::vset::VertexSet;
use crate::weights::{Weight, WeightFunction};

/// An unordered pair of cliques, stored with the lexicographically smaller
/// clique first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CliquePair {
    k1: VertexSet,
    k2: VertexSet,
}

impl CliquePair {
    /// Checks that both sets are cliques of `g` with at most `max_size`
    /// vertices each.
    pub fn new(g: &Graph, k1: VertexSet, k2: VertexSet, max_size: Option<usize>) -> Result<Self> {
        for k in [k1, k2] {
            if !k.is_subset(g.vertices()) {
                return Err(Error::VertexOutOfRange { vertex: k.max().unwrap_or(0), n: g.n() });
            }
            if !g.is_clique(k) {
                return Err(Error::NotAClique(k));
            }
            if max_size.is_some_and(|m| k.len() > m) {
                return Err(Error::InvalidParameters(format!("clique {k} has more than {} vertices", max_size.unwrap())));
            }
        }
        Ok(Self::ordered(k1, k2))
    }

    pub(crate) fn ordered(k1: VertexSet, k2: VertexSet) -> Self {
        if k2.lex_cmp(k1) == Ordering::Less {
            CliquePair { k1: k2, k2: k1 }
        } else {
            CliquePair { k1, k2 }
        }
    }

    pub fn k1(&self) -> VertexSet {
        self.k1
    }

    pub fn k2(&self) -> VertexSet {
        self.k2
    }

    /// `K1 ∪ K2`.
    pub fn union(&self) -> VertexSet {
        self.k1.union(self.k2)
    }

    pub fn max_size(&self) -> usize {
        self.k1.len().max(self.k2.len())
    }

    /// The default total order: lexicographic on the sorted members of
    /// `K1 ∪ K2`, then on `K1`.
    pub fn pi_cmp(&self, other: &Self) -> Ordering {
        self.union()
            .lex_cmp(other.union())
            .then_with(|| self.k1.lex_cmp(other.k1))
    }
}

impl fmt::Display for CliquePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.k1, self.k2)
    }
}

/// `S(K1, K2) = (A, K1 ∪ K2, B)` where `B` is the component of
/// `G ∖ (K1 ∪ K2)` of weight greater than 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalSeparation {
    pub pair: CliquePair,
    pub a: VertexSet,
    pub b: VertexSet,
    pub weight_of_b: Weight,
}

impl CanonicalSeparation {
    pub fn c(&self) -> VertexSet {
        self.pair.union()
    }

    /// `B ∪ C`.
    pub fn b_side(&self) -> VertexSet {
        self.b.union(self.c())
    }

    pub fn separation(&self) -> Separation {
        Separation { a: self.a, c: self.c(), b: self.b }
    }

    /// Some component `D` of `A` has `K1 ∪ K2 ⊆ N(D)`; when both cliques are
    /// single vertices, `G[A ∪ K1 ∪ K2]` must also not be a path between
    /// them.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let c = self.c();
        let attached = g.components(self.a).into_iter().any(|d| c.is_subset(g.neighborhood(d)));
        if !attached {
            return false;
        }
        if self.pair.k1.len() == 1 && self.pair.k2.len() == 1 {
            let (x, y) = (self.pair.k1.min().unwrap(), self.pair.k2.min().unwrap());
            return !is_path_between(g, self.a.union(c), x, y);
        }
        true
    }
}

/// `G[x]` is a path with ends `s` and `t`.
pub(crate) fn is_path_between(g: &Graph, x: VertexSet, s: usize, t: usize) -> bool {
    if s == t || !x.contains(s) || !x.contains(t) || !g.is_connected_set(x) {
        return false;
    }
    if g.edges_within(x) != x.len() - 1 {
        return false;
    }
    x.iter().all(|v| {
        let d = g.neighbors(v).intersection(x).len();
        if v == s || v == t {
            d == 1
        } else {
            d == 2
        }
    })
}

/// The canonical separation for `pair`, or [`Error::NotUnbalanced`] when no
/// component of `G ∖ (K1 ∪ K2)` weighs more than 1/2.
pub fn canonical_separation(g: &Graph, w: &WeightFunction, pair: CliquePair) -> Result<CanonicalSeparation> {
    let c = pair.union();
    let rest = g.vertices().difference(c);
    let heavy = g
        .components(rest)
        .into_iter()
        .find(|&d| w.of(d).exceeds_half());
    match heavy {
        Some(b) => Ok(CanonicalSeparation { pair, a: rest.difference(b), b, weight_of_b: w.of(b) }),
        None => {
            let max = g.components(rest).into_iter().map(|d| w.of(d)).max_by_key(|x| x.mass);
            let reason = match max {
                Some(m) => format!("largest component of G minus the cliques weighs {m}, not more than 1/2"),
                None => "the cliques cover V(G)".to_string(),
            };
            Err(Error::NotUnbalanced { pair: pair.to_string(), reason })
        }
    }
}

pub fn is_proper(g: &Graph, w: &WeightFunction, pair: CliquePair) -> Result<bool> {
    Ok(canonical_separation(g, w, pair)?.is_proper(g))
}

/// Canonical separations of the proper pairs of `pool`; pairs without a
/// canonical separation are not proper and are dropped.
pub fn proper_separations(g: &Graph, w: &WeightFunction, pool: &[CliquePair]) -> Vec<CanonicalSeparation> {
    pool.iter()
        .filter_map(|&p| canonical_separation(g, w, p).ok())
        .filter(|s| s.is_proper(g))
        .collect()
}

fn is_strict_subset(x: VertexSet, y: VertexSet) -> bool {
    x.is_subset(y) && x != y
}

/// `s` is proper and no proper `s'` in `others` with a different clique
/// union has `B' ∪ C' ⊊ B ∪ C`, or `B' ∪ C' = B ∪ C` without `B' ⊊ B`.
pub fn is_active_among(g: &Graph, s: &CanonicalSeparation, others: &[CanonicalSeparation]) -> bool {
    if !s.is_proper(g) {
        return false;
    }
    let side = s.b_side();
    others.iter().all(|t| {
        if t.c() == s.c() {
            return true;
        }
        let t_side = t.b_side();
        if is_strict_subset(t_side, side) {
            return false;
        }
        !(t_side == side && !is_strict_subset(t.b, s.b))
    })
}

/// Activeness of `pair` relative to the candidate pairs in `pool`.
pub fn is_active(g: &Graph, w: &WeightFunction, pair: CliquePair, pool: &[CliquePair]) -> Result<bool> {
    let s = canonical_separation(g, w, pair)?;
    let others = proper_separations(g, w, pool);
    Ok(is_active_among(g, &s, &others))
}

/// Unordered pairs of distinct cliques with one to `k` vertices each.
pub fn clique_pool(g: &Graph, k: usize) -> Vec<CliquePair> {
    let cliques = enumerate_cliques(g, k);
    let mut out = Vec::with_capacity(cliques.len() * cliques.len().saturating_sub(1) / 2);
    for (i, &x) in cliques.iter().enumerate() {
        for &y in &cliques[i + 1..] {
            out.push(CliquePair::ordered(x, y));
        }
    }
    out
}

/// All active pairs over the full pool of cliques of size at most `k`, in
/// pool order.
pub fn active_pairs(g: &Graph, w: &WeightFunction, k: usize) -> Vec<CliquePair> {
    let seps = proper_separations(g, w, &clique_pool(g, k));
    seps.iter()
        .filter(|s| is_active_among(g, s, &seps))
        .map(|s| s.pair)
        .collect()
}

/// `A1 ∩ C2 = A2 ∩ C1 = ∅`.
pub fn loosely_noncrossing(s1: &CanonicalSeparation, s2: &CanonicalSeparation) -> bool {
    !s1.a.intersects(s2.c()) && !s2.a.intersects(s1.c())
}

/// `A1 ∪ C1 ⊆ B2 ∪ C2` and `A2 ∪ C2 ⊆ B1 ∪ C1`.
pub fn noncrossing(s1: &CanonicalSeparation, s2: &CanonicalSeparation) -> bool {
    s1.a.union(s1.c()).is_subset(s2.b_side()) && s2.a.union(s2.c()).is_subset(s1.b_side())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete, cycle, path_graph};
    use num::BigRational;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn single(x: usize, y: usize) -> CliquePair {
        CliquePair::ordered(VertexSet::singleton(x), VertexSet::singleton(y))
    }

    fn rationals(values: &[(i64, i64)]) -> WeightFunction {
        let r: Vec<BigRational> = values.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        WeightFunction::from_rationals(&r).unwrap()
    }

    /// Ends a = 0, b = 1; x1 = 2, x2 = 3, y1 = 4, y2 = 5, z1 = 6, z2 = 7.
    fn theta_example() -> (Graph, WeightFunction) {
        let g = crate::corpus::generators::theta(3, 3, 3).unwrap();
        let w = rationals(&[(1, 15), (1, 15), (3, 10), (3, 10), (1, 15), (1, 15), (1, 15), (1, 15)]);
        (g, w)
    }

    #[test]
    fn canonical_on_paths() {
        let g = path_graph(9);
        let w = WeightFunction::uniform(9).unwrap();
        let s = canonical_separation(&g, &w, single(6, 7)).unwrap();
        assert_eq!(s.b, set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(s.a, set(&[8]));
        assert_eq!(s.weight_of_b.to_string(), "2/3");
        assert!(!s.is_proper(&g));

        let g = path_graph(5);
        let w = WeightFunction::uniform(5).unwrap();
        assert!(matches!(
            canonical_separation(&g, &w, single(1, 3)),
            Err(Error::NotUnbalanced { .. })
        ));
    }

    #[test]
    fn theta_pair_is_proper_and_active() {
        let (g, w) = theta_example();
        let pair = single(0, 1);
        let s = canonical_separation(&g, &w, pair).unwrap();
        assert_eq!(s.b, set(&[2, 3]));
        assert_eq!(s.a, set(&[4, 5, 6, 7]));
        assert_eq!(s.weight_of_b.to_string(), "3/5");
        assert!(s.is_proper(&g));
        let pool = clique_pool(&g, 2);
        assert!(is_active(&g, &w, pair, &pool).unwrap());
        assert!(is_active(&g, &w, pair, &[pair]).unwrap());
        assert!(active_pairs(&g, &w, 2).contains(&pair));
    }

    #[test]
    fn c6_pair_is_a_path() {
        let g = cycle(6);
        let w = rationals(&[(1, 10), (3, 10), (3, 10), (1, 10), (1, 10), (1, 10)]);
        // v1..v6 = 0..5; K1 = {v1}, K2 = {v4}
        assert!(!is_proper(&g, &w, single(0, 3)).unwrap());
    }

    #[test]
    fn no_active_pairs() {
        let g = cycle(9);
        assert!(active_pairs(&g, &WeightFunction::uniform(9).unwrap(), 2).is_empty());
        let g = complete(5);
        assert!(active_pairs(&g, &WeightFunction::uniform(5).unwrap(), 2).is_empty());
    }

    /// C_8 core 0..7 carrying most of the weight, plus the path 0-8-9-2
    /// parallel to 0-1-2.
    fn appendage_example() -> (Graph, WeightFunction) {
        let mut edges: Vec<_> = cycle(8).edges().collect();
        edges.extend([(0, 8), (8, 9), (9, 2)]);
        let g = Graph::from_edges(10, edges).unwrap();
        let w = WeightFunction::from_masses(vec![1, 1, 1, 1, 10, 10, 10, 10, 1, 1]).unwrap();
        (g, w)
    }

    #[test]
    fn nested_pair_is_not_active() {
        let (g, w) = appendage_example();
        let pool = clique_pool(&g, 2);
        let outer = canonical_separation(&g, &w, single(0, 2)).unwrap();
        assert_eq!(outer.a, set(&[1, 8, 9]));
        assert!(outer.is_proper(&g));
        let inner = canonical_separation(&g, &w, single(0, 3)).unwrap();
        assert!(inner.is_proper(&g));
        assert!(inner.b_side().is_subset(outer.b_side()) && inner.b_side() != outer.b_side());
        assert!(!is_active(&g, &w, single(0, 2), &pool).unwrap());
    }

    #[test]
    fn crossing_relations() {
        let (g, w) = appendage_example();
        let s1 = canonical_separation(&g, &w, single(0, 2)).unwrap();
        assert!(loosely_noncrossing(&s1, &s1));
        // A1 ∪ C1 ⊆ B1 ∪ C1 only when A1 is empty
        assert!(!noncrossing(&s1, &s1));
        // a clique vertex of the second separation lies in A1
        let s2 = canonical_separation(&g, &w, single(1, 5)).unwrap();
        assert!(!loosely_noncrossing(&s1, &s2));
        // same A-side, larger middle: loosely non-crossing only
        let k = CliquePair::new(&g, set(&[0, 7]), set(&[2]), Some(2)).unwrap();
        let s3 = canonical_separation(&g, &w, k).unwrap();
        assert_eq!(s3.a, s1.a);
        assert!(loosely_noncrossing(&s1, &s3));
        assert!(!noncrossing(&s1, &s3));
    }

    #[test]
    fn pair_order_is_canonical() {
        let g = path_graph(4);
        let p = CliquePair::new(&g, set(&[2, 3]), set(&[0]), None).unwrap();
        assert_eq!((p.k1(), p.k2()), (set(&[0]), set(&[2, 3])));
        assert_eq!(CliquePair::new(&g, set(&[0, 2]), set(&[3]), None), Err(Error::NotAClique(set(&[0, 2]))));
    }
}
