//! Central bags for families of loosely non-crossing two-clique separations,
//! their inherited weights, and the separator lift back to `G`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cutsets::two_clique::{canonical_separation, loosely_noncrossing, CanonicalSeparation, CliquePair};
use crate::error::{Error, Result};
use crate::graph::{induced_path, Graph, Path};
use crate::vset::VertexSet;
use crate::weights::WeightFunction;

/// The total order `π` on the family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PiOrder {
    /// Lexicographic on the sorted members of `K1 ∪ K2`, then on `K1`.
    #[default]
    Lexicographic,
    /// The order in which the pairs are given.
    AsGiven,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BagPair {
    pub pair: CliquePair,
    pub separation: CanonicalSeparation,
    /// Components of `⋃ A(S)` assigned to this pair.
    pub a_star: VertexSet,
    /// Shortest `K1`–`K2` path with interior in `A*`; present iff `A* ≠ ∅`.
    pub marker: Option<Path>,
    /// The marker vertex next to its `K1` end, carrying `w(A*)`.
    pub anchor: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralBag {
    /// The family in `π` order.
    pub pairs: Vec<BagPair>,
    /// `⋂ (B ∪ K1 ∪ K2)` over pairs with `A* ≠ ∅`.
    pub core: VertexSet,
    pub beta: VertexSet,
    /// Inherited weights, indexed by vertices of `G` (zero outside `β`).
    pub w_beta: WeightFunction,
    /// Largest clique in the family (at least 1).
    pub k: usize,
    /// `max(1, max_v |δ(v)|)` over `V(G)`.
    pub delta: usize,
    /// `max_v |δ(v)|` over `β`.
    pub delta_beta: usize,
}

/// Union of the cliques of `pairs` that contain `v`.
pub fn delta(pairs: &[CliquePair], v: usize) -> VertexSet {
    pairs
        .iter()
        .flat_map(|p| [p.k1(), p.k2()])
        .filter(|k| k.contains(v))
        .fold(VertexSet::EMPTY, VertexSet::union)
}

/// Shortest induced path from `K1` to `K2` with nonempty interior inside
/// `a_star`; ties go to the lexicographically smallest sequence.
fn marker_path(g: &Graph, pair: &CliquePair, a_star: VertexSet) -> Option<Path> {
    let mut best: Option<Path> = None;
    for s in pair.k1() {
        for t in pair.k2() {
            if s == t || g.has_edge(s, t) {
                continue;
            }
            let Some(p) = induced_path(g, s, t, a_star.with(s).with(t)) else {
                continue;
            };
            let better = match &best {
                None => true,
                Some(b) => (p.length(), p.vertices()).cmp(&(b.length(), b.vertices())) == Ordering::Less,
            };
            if better {
                best = Some(p);
            }
        }
    }
    best
}

/// Builds the central bag of `pairs` under `order`.
///
/// Each component of `⋃ A(S)` goes to the `π`-minimal pair whose `A`-side
/// contains it; the marker path of a pair with `A* ≠ ∅` joins its cliques
/// through `A*`. `β` is the intersection of `B ∪ K1 ∪ K2` over those pairs
/// plus their marker paths, and `w_β` keeps `w` on the intersection and
/// puts `w(A*)` on each anchor.
pub fn build_central_bag(g: &Graph, w: &WeightFunction, pairs: &[CliquePair], order: PiOrder) -> Result<CentralBag> {
    let mut family: Vec<CliquePair> = Vec::with_capacity(pairs.len());
    for p in pairs {
        if !family.contains(p) {
            family.push(*p);
        }
    }
    if order == PiOrder::Lexicographic {
        family.sort_by(|a, b| a.pi_cmp(b));
    }
    let seps: Vec<CanonicalSeparation> =
        family.iter().map(|&p| canonical_separation(g, w, p)).collect::<Result<_>>()?;
    for i in 0..seps.len() {
        for j in i + 1..seps.len() {
            if !loosely_noncrossing(&seps[i], &seps[j]) {
                return Err(Error::CrossingPairs(family[i].to_string(), family[j].to_string()));
            }
        }
    }
    let union_a = seps.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s.a));
    let mut a_star = vec![VertexSet::EMPTY; seps.len()];
    for d in g.components(union_a) {
        let owner = seps.iter().position(|s| d.is_subset(s.a)).ok_or(Error::UnassignedComponent(d))?;
        a_star[owner] = a_star[owner].union(d);
    }

    let mut bag_pairs = Vec::with_capacity(seps.len());
    let mut core = g.vertices();
    let mut markers = VertexSet::EMPTY;
    let mut mass = vec![0u128; g.n()];
    for (i, s) in seps.iter().enumerate() {
        let (marker, anchor) = if a_star[i].is_empty() {
            (None, None)
        } else {
            let p = marker_path(g, &s.pair, a_star[i]).ok_or_else(|| Error::NoMarkerPath(s.pair.to_string()))?;
            let anchor = p.vertices()[1];
            core = core.intersection(s.b_side());
            markers = markers.union(p.vertex_set());
            mass[anchor] += w.mass_of(a_star[i]);
            (Some(p), Some(anchor))
        };
        bag_pairs.push(BagPair { pair: s.pair, separation: *s, a_star: a_star[i], marker, anchor });
    }
    for v in core {
        mass[v] += w.mass(v);
    }
    let beta = core.union(markers);
    let w_beta = WeightFunction::with_denominator(mass, w.denom())?;
    let k = family.iter().map(CliquePair::max_size).max().unwrap_or(1).max(1);
    let delta_g = g.vertices().iter().map(|v| delta(&family, v).len()).max().unwrap_or(0);
    let delta_beta = beta.iter().map(|v| delta(&family, v).len()).max().unwrap_or(0);
    Ok(CentralBag { pairs: bag_pairs, core, beta, w_beta, k, delta: delta_g.max(1), delta_beta })
}

impl CentralBag {
    pub fn family(&self) -> Vec<CliquePair> {
        self.pairs.iter().map(|p| p.pair).collect()
    }

    /// `G[β]` with its vertex map (new id ↦ vertex of `G`).
    pub fn graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        g.induced_subgraph(self.beta)
    }

    /// `w_β` on `G[β]`, numbered as in [`graph`](Self::graph).
    pub fn weights_on_beta(&self) -> Result<WeightFunction> {
        self.w_beta.pulled_back(&self.beta.to_vec())
    }

    /// Interior vertices of all marker paths.
    pub fn marker_interiors(&self) -> VertexSet {
        self.pairs
            .iter()
            .filter_map(|p| p.marker.as_ref())
            .fold(VertexSet::EMPTY, |acc, m| acc.union(m.interior()))
    }

    /// `Y = ⋃_{x ∈ X} Y(x)` with `Y(x) = δ(x) ∪ {x}` on the intersection
    /// part and `Y(x) = K1 ∪ K2` for `x` interior to the marker of
    /// `{K1, K2}`.
    pub fn lift_separator(&self, x: VertexSet) -> Result<VertexSet> {
        let family = self.family();
        let mut y = VertexSet::EMPTY;
        for v in x {
            if self.core.contains(v) {
                y = y.union(delta(&family, v)).with(v);
                continue;
            }
            let owner = self
                .pairs
                .iter()
                .find(|p| p.marker.as_ref().is_some_and(|m| m.interior().contains(v)))
                .ok_or(Error::NotInBag(v))?;
            y = y.union(owner.pair.union());
        }
        Ok(y)
    }

    /// `max(2K·d, Δ·d)`.
    pub fn lift_bound(&self, d: usize) -> usize {
        (2 * self.k * d).max(self.delta * d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::cycle;
    use num::BigRational;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// C_8 core v1..v8 = 0..7 with the appendage v1-u1-u2-v4, u1 = 8, u2 = 9.
    fn appendage() -> (Graph, WeightFunction) {
        let mut edges: Vec<_> = cycle(8).edges().collect();
        edges.extend([(0, 8), (8, 9), (9, 3)]);
        let g = Graph::from_edges(10, edges).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let mut ws = vec![r(1, 40); 8];
        for v in 4..8 {
            ws[v] = r(3, 20);
        }
        ws.extend([r(3, 20), r(3, 20)]);
        (g, WeightFunction::from_rationals(&ws).unwrap())
    }

    fn single(x: usize, y: usize) -> CliquePair {
        CliquePair::ordered(VertexSet::singleton(x), VertexSet::singleton(y))
    }

    #[test]
    fn empty_family() {
        let (g, w) = appendage();
        let bag = build_central_bag(&g, &w, &[], PiOrder::Lexicographic).unwrap();
        assert_eq!(bag.beta, g.vertices());
        assert_eq!(bag.w_beta, w);
        assert_eq!(bag.lift_separator(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
    }

    #[test]
    fn appendage_bag() {
        let (g, w) = appendage();
        let bag = build_central_bag(&g, &w, &[single(0, 3)], PiOrder::Lexicographic).unwrap();
        let p = &bag.pairs[0];
        assert_eq!(p.separation.b, set(&[4, 5, 6, 7]));
        assert_eq!(p.a_star, set(&[1, 2, 8, 9]));
        assert_eq!(p.marker.as_ref().unwrap().vertices(), &[0, 1, 2, 3]);
        assert_eq!(p.anchor, Some(1));
        assert_eq!(bag.beta, set(&[0, 1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(bag.w_beta.of_vertex(1), w.of(p.a_star));
        assert_eq!(bag.w_beta.of_vertex(2).mass, 0);
        assert_eq!(bag.w_beta.total().mass, bag.w_beta.denom());
        assert_eq!(bag.lift_separator(set(&[1])).unwrap(), set(&[0, 3]));
        assert_eq!(bag.lift_separator(set(&[5])).unwrap(), set(&[5]));
        assert_eq!(bag.lift_separator(set(&[8])), Err(Error::NotInBag(8)));
    }

    #[test]
    fn delta_sets() {
        let pairs = [CliquePair::ordered(set(&[0, 1]), set(&[5]))];
        assert_eq!(delta(&pairs, 3), VertexSet::EMPTY);
        assert_eq!(delta(&pairs, 0), set(&[0, 1]));
        let pairs = [
            CliquePair::ordered(set(&[0, 1]), set(&[5])),
            CliquePair::ordered(set(&[0, 2]), set(&[6])),
        ];
        assert_eq!(delta(&pairs, 0), set(&[0, 1, 2]));
    }

    #[test]
    fn crossing_family_is_rejected() {
        let (g, w) = appendage();
        let err = build_central_bag(&g, &w, &[single(0, 3), single(0, 2)], PiOrder::Lexicographic);
        assert!(matches!(err, Err(Error::CrossingPairs(..))));
    }
}
