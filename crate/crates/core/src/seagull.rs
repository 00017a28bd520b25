//! Thetas through heavy seagulls and the two-clique separations that break
//! them.

use std::cell::OnceCell;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::balance::is_unbalanced;
use crate::budget::Budget;
use crate::cutsets::{
    canonical_separation, find_star_cutset, is_active_among, proper_separations, star_to_cliques,
    CanonicalSeparation, CliquePair, Separation,
};
use crate::error::{Error, Result};
use crate::graph::{induced_path, Graph, Path};
use crate::recognizers::{class_membership, ConfigurationKind, ConfigurationWitness, Roles, Seagull};
use crate::vset::VertexSet;
use crate::weights::WeightFunction;

/// Whether hypotheses are checked before running a construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisPolicy {
    /// Check every hypothesis and fail with [`Error::HypothesisViolated`].
    #[default]
    Require,
    /// Skip the checks; outcomes are reported as resting on assumptions.
    Assume,
}

impl HypothesisPolicy {
    pub fn tag(self) -> &'static str {
        match self {
            HypothesisPolicy::Require => "hypotheses verified",
            HypothesisPolicy::Assume => "hypotheses assumed",
        }
    }
}

impl fmt::Display for HypothesisPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub(crate) fn violated(stage: &str, hypothesis: impl Into<String>) -> Error {
    Error::HypothesisViolated { stage: stage.to_string(), hypothesis: hypothesis.into() }
}

/// `G ∈ F_2`.
pub fn check_in_f2(g: &Graph, budget: &mut Budget) -> Result<()> {
    if class_membership(g, 2, budget)?.in_f_2 {
        Ok(())
    } else {
        Err(violated("class", "G is very sparse and triangle-free"))
    }
}

pub fn check_no_star_cutset(g: &Graph) -> Result<()> {
    match find_star_cutset(g)? {
        None => Ok(()),
        Some((_, center)) => Err(violated("star-cutset", format!("G has no star cutset (one is centred at {center})"))),
    }
}

pub fn check_unbalanced(g: &Graph, w: &WeightFunction, d: usize, budget: &mut Budget) -> Result<()> {
    if is_unbalanced(g, w, d, budget)? {
        Ok(())
    } else {
        Err(violated("unbalanced", format!("(G, w) is {d}-unbalanced")))
    }
}

pub fn check_heavy(g: &Graph, f: Seagull) -> Result<()> {
    if !f.is_seagull_in(g) {
        return Err(Error::InvalidParameters(format!("{}-{}-{} is not an induced path", f.a, f.v, f.u)));
    }
    if g.degree(f.a) < 3 || g.degree(f.u) < 3 {
        return Err(violated("seagull", format!("both ends of {}-{}-{} have degree at least 3", f.a, f.v, f.u)));
    }
    Ok(())
}

/// A theta with ends `a`, `b` whose first path starts `a - v1 - u1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaThroughSeagull {
    /// The seagull read from the end `a` of the theta.
    pub seagull: Seagull,
    pub b: usize,
    pub paths: [Path; 3],
}

impl ThetaThroughSeagull {
    pub fn a(&self) -> usize {
        self.seagull.a
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()))
    }

    pub fn witness(&self) -> ConfigurationWitness {
        ConfigurationWitness {
            kind: ConfigurationKind::Theta,
            vertices: self.vertex_set(),
            roles: Roles::Theta { ends: (self.seagull.a, self.b), paths: self.paths.clone() },
        }
    }

    /// Re-checks the theta and that its first path begins with the seagull.
    pub fn validate(&self, g: &Graph) -> bool {
        let f = self.seagull;
        self.paths[0].vertices().starts_with(&[f.a, f.v, f.u]) && self.witness().validate(g)
    }
}

/// Calls `visit` on every induced path that extends `prefix` to exactly
/// `len` edges using new vertices from `allowed`, in lexicographic order.
/// With `end = Some(t)` only paths ending at `t` are visited.
fn for_each_induced_extension(
    g: &Graph,
    prefix: &[usize],
    len: usize,
    allowed: VertexSet,
    end: Option<usize>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize], &mut Budget) -> Result<ControlFlow<()>>,
) -> Result<ControlFlow<()>> {
    let mut path = prefix.to_vec();
    let mut blocked = VertexSet::EMPTY;
    for &v in &prefix[..prefix.len() - 1] {
        blocked = blocked.union(g.closed_neighbors(v));
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        len: usize,
        allowed: VertexSet,
        end: Option<usize>,
        blocked: VertexSet,
        path: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize], &mut Budget) -> Result<ControlFlow<()>>,
    ) -> Result<ControlFlow<()>> {
        let last = *path.last().expect("prefix is nonempty");
        if path.len() == len + 1 {
            return visit(path, budget);
        }
        let remaining = len + 1 - path.len();
        let mut next = g.neighbors(last).intersection(allowed).difference(blocked).without(last);
        if let Some(t) = end {
            next = if remaining == 1 { next.intersection(VertexSet::singleton(t)) } else { next.without(t) };
        }
        let blocked = blocked.union(g.closed_neighbors(last));
        for x in next {
            budget.tick()?;
            // a vertex adjacent to the far end must be the last interior one
            if end.is_some_and(|t| remaining > 2 && g.has_edge(x, t)) {
                continue;
            }
            path.push(x);
            let flow = rec(g, len, allowed, end, blocked, path, budget, visit)?;
            path.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    if path.len() > len + 1 {
        return Ok(ControlFlow::Continue(()));
    }
    rec(g, len, allowed, end, blocked, &mut path, budget, visit)
}

/// Two induced `a`–`b` paths with interiors in `allowed`, disjoint and
/// anticomplete to each other. The first is shortest possible, then
/// lexicographically first; the second is a shortest completion.
fn two_paths(g: &Graph, a: usize, b: usize, allowed: VertexSet, budget: &mut Budget) -> Result<Option<(Path, Path)>> {
    let allowed = allowed.without(a).without(b);
    let span = allowed.with(a).with(b);
    if induced_path(g, a, b, span).is_none() {
        return Ok(None);
    }
    for len in 2..=allowed.len() + 1 {
        let mut found = None;
        let _ = for_each_induced_extension(g, &[a], len, allowed.with(b), Some(b), budget, &mut |p, _| {
            let interior: VertexSet = p[1..p.len() - 1].iter().collect();
            let rest = allowed.difference(g.closed_neighborhood(interior));
            if let Some(q) = induced_path(g, a, b, rest.with(a).with(b)) {
                if q.length() >= 2 {
                    found = Some((Path::new_unchecked(p.to_vec()), q));
                    return Ok(ControlFlow::Break(()));
                }
            }
            Ok(ControlFlow::Continue(()))
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// A theta through `f` with end `f.a` whose path through `f` is as short as
/// possible.
///
/// Candidate paths `a - v - u - … - b` are tried by increasing length and
/// then lexicographically; for each, the other two paths are searched
/// exhaustively among vertices off the first path and its neighbourhood.
pub fn find_theta_through(g: &Graph, f: Seagull, budget: &mut Budget) -> Result<Option<ThetaThroughSeagull>> {
    if !f.is_seagull_in(g) {
        return Err(Error::InvalidParameters(format!("{}-{}-{} is not an induced path", f.a, f.v, f.u)));
    }
    let all = g.vertices();
    for len in 2..g.n() {
        let mut found = None;
        let mut any = false;
        let _ = for_each_induced_extension(g, &[f.a, f.v, f.u], len, all, None, budget, &mut |p, budget| {
            any = true;
            let b = *p.last().expect("nonempty");
            let interior: VertexSet = p[1..p.len() - 1].iter().collect();
            let allowed = all.difference(g.closed_neighborhood(interior)).difference(p.iter().collect());
            if let Some((p2, p3)) = two_paths(g, f.a, b, allowed, budget)? {
                let p1 = Path::new_unchecked(p.to_vec());
                let (p2, p3) = if p2.vertices() <= p3.vertices() { (p2, p3) } else { (p3, p2) };
                found = Some(ThetaThroughSeagull { seagull: f, b, paths: [p1, p2, p3] });
                return Ok(ControlFlow::Break(()));
            }
            Ok(ControlFlow::Continue(()))
        })?;
        if found.is_some() {
            return Ok(found);
        }
        if !any {
            break;
        }
    }
    Ok(None)
}

/// Proper canonical separations of a clique pool, with the active ones
/// computed on first use.
#[derive(Debug)]
pub struct PairIndex {
    proper: Vec<CanonicalSeparation>,
    active: OnceCell<Vec<usize>>,
}

impl PairIndex {
    pub fn new(g: &Graph, w: &WeightFunction, pool: &[CliquePair]) -> Self {
        let mut proper = proper_separations(g, w, pool);
        proper.sort_by(|s, t| s.pair.pi_cmp(&t.pair));
        PairIndex { proper, active: OnceCell::new() }
    }

    /// Proper separations in `π` order.
    pub fn proper(&self) -> &[CanonicalSeparation] {
        &self.proper
    }

    /// Active separations in `π` order.
    pub fn active(&self, g: &Graph) -> impl Iterator<Item = &CanonicalSeparation> {
        let idx = self.active.get_or_init(|| {
            (0..self.proper.len())
                .filter(|&i| is_active_among(g, &self.proper[i], &self.proper))
                .collect()
        });
        idx.iter().map(|&i| &self.proper[i])
    }

    pub fn is_active(&self, g: &Graph, s: &CanonicalSeparation) -> bool {
        is_active_among(g, s, &self.proper)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BreakingMethod {
    Construction,
    Search,
}

/// A pair breaking a heavy seagull `a - v1 - u1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakingPair {
    pub seagull: Seagull,
    pub method: BreakingMethod,
    pub pair: CliquePair,
    pub separation: CanonicalSeparation,
    /// The theta used by the construction.
    pub theta: Option<ThetaThroughSeagull>,
    /// The cliques obtained from the star separation around `b'` and `v1`.
    pub star_cliques: Option<(VertexSet, VertexSet)>,
    /// The proper pair `N(D)` that the minimisation starts from.
    pub initial: Option<CliquePair>,
}

impl BreakingPair {
    /// Active and `A ∩ {a, u1} ≠ ∅`.
    pub fn satisfies_postcondition(&self, g: &Graph, index: &PairIndex) -> bool {
        let ends = VertexSet::singleton(self.seagull.a).with(self.seagull.u);
        self.separation.a.intersects(ends) && index.is_active(g, &self.separation)
    }
}

fn as_hypothesis(stage: &str, hypothesis: &str, e: Error) -> Error {
    match e {
        Error::NotUnbalanced { .. } | Error::NotSparse(_) | Error::NotAClique(_) | Error::InvalidSeparation(_) => {
            violated(stage, format!("{hypothesis} ({e})"))
        }
        other => other,
    }
}

/// The construction: a shortest theta `T'` through `f` with end `a` and
/// other end `b'`, the separation with middle `(N[b'] ∪ N[v1]) ∖ {a, u1}`,
/// its cliques `X, Y`, the component `D` of `A(X, Y)` meeting `{a, u1}`,
/// and finally the proper pair with `B ∪ C ⊆ B(N(D)) ∪ N(D)` that has the
/// smallest `B ∪ C` and, among those, the largest `B`.
pub fn breaking_pair_by_construction(
    g: &Graph,
    w: &WeightFunction,
    f: Seagull,
    index: &PairIndex,
    budget: &mut Budget,
) -> Result<BreakingPair> {
    let theta = match find_theta_through(g, f, budget)? {
        Some(t) => t,
        None => find_theta_through(g, f.reversed(), budget)?
            .ok_or_else(|| violated("theta", "the heavy seagull is extendable"))?,
    };
    let Seagull { a, v: v1, u: u1 } = theta.seagull;
    let b = theta.b;
    if b == u1 {
        return Err(violated("theta", "the path of the theta through the seagull has at least four vertices"));
    }
    let ends = VertexSet::singleton(a).with(u1);
    let c = g.closed_neighbors(b).union(g.closed_neighbors(v1)).difference(ends);
    let rest = g.vertices().difference(c);
    let da = g.component_of(rest, a);
    let du = g.component_of(rest, u1);
    if da == du {
        return Err(violated("split", format!("{a} and {u1} lie in different components of G - (N[{b}] ∪ N[{v1}])")));
    }
    let sep = Separation::new(g, da, c, rest.difference(da))?;
    let cliques = star_to_cliques(g, &sep, &[b, v1], da, du)
        .map_err(|e| as_hypothesis("star-to-cliques", "the star separation splits into two cliques", e))?;
    let (x, y) = (cliques[0], cliques[1]);
    let first = CliquePair::new(g, x, y, None)?;
    let s0 = canonical_separation(g, w, first)
        .map_err(|e| as_hypothesis("canonical", "the canonical separation of {X, Y} is defined", e))?;
    let p = [a, u1]
        .into_iter()
        .find(|&p| s0.a.contains(p))
        .ok_or_else(|| violated("canonical", format!("A({first}) meets {{{a}, {u1}}}")))?;
    let d = g.component_of(s0.a, p);
    let nd = g.neighborhood(d);
    let (k1, k2) = (nd.intersection(x), nd.intersection(y));
    if k1.is_empty() || k2.is_empty() || k1 == k2 {
        return Err(violated("attachments", format!("N({d:?}) meets both {x:?} and {y:?} (no clique cutset)")));
    }
    let initial = CliquePair::new(g, k1, k2, None)?;
    let s1 = canonical_separation(g, w, initial)
        .map_err(|e| as_hypothesis("canonical", "the canonical separation of N(D) is defined", e))?;
    if !s1.is_proper(g) {
        return Err(violated("proper", format!("{initial} is proper")));
    }
    let target = s1.b_side();
    let best = index
        .proper()
        .iter()
        .chain(std::iter::once(&s1))
        .filter(|s| s.b_side().is_subset(target))
        .min_by(|s, t| {
            (s.b_side().len(), t.b.len())
                .cmp(&(t.b_side().len(), s.b.len()))
                .then_with(|| s.b_side().lex_cmp(t.b_side()))
                .then_with(|| s.pair.pi_cmp(&t.pair))
        })
        .copied()
        .expect("the initial pair is a candidate");
    Ok(BreakingPair {
        seagull: f,
        method: BreakingMethod::Construction,
        pair: best.pair,
        separation: best,
        theta: Some(theta),
        star_cliques: Some((x, y)),
        initial: Some(initial),
    })
}

/// The `π`-first active pair of the index whose `A`-side meets the ends of
/// `f`.
pub fn breaking_pair_by_search(g: &Graph, f: Seagull, index: &PairIndex) -> Result<BreakingPair> {
    let ends = VertexSet::singleton(f.a).with(f.u);
    let s = index
        .active(g)
        .find(|s| s.a.intersects(ends))
        .copied()
        .ok_or_else(|| Error::NotFound(format!("active pair breaking {}-{}-{}", f.a, f.v, f.u)))?;
    Ok(BreakingPair {
        seagull: f,
        method: BreakingMethod::Search,
        pair: s.pair,
        separation: s,
        theta: None,
        star_cliques: None,
        initial: None,
    })
}

/// Runs the construction, falling back to the search when the construction
/// stops on a violated hypothesis.
pub(crate) fn breaking_pair_with_index(
    g: &Graph,
    w: &WeightFunction,
    f: Seagull,
    index: &PairIndex,
    budget: &mut Budget,
) -> Result<BreakingPair> {
    match breaking_pair_by_construction(g, w, f, index, budget) {
        Ok(bp) => Ok(bp),
        Err(e @ Error::HypothesisViolated { .. }) => breaking_pair_by_search(g, f, index).map_err(|_| e),
        Err(e) => Err(e),
    }
}

/// An active pair from `pool` whose `A`-side meets `{a, u1}`.
///
/// Under [`HypothesisPolicy::Require`] this first checks that `G ∈ F_2`,
/// that `G` has no star cutset, that `(G, w)` is `4`-unbalanced and that
/// `f` is heavy.
pub fn breaking_pair(
    g: &Graph,
    w: &WeightFunction,
    f: Seagull,
    pool: &[CliquePair],
    policy: HypothesisPolicy,
    budget: &mut Budget,
) -> Result<BreakingPair> {
    if policy == HypothesisPolicy::Require {
        check_heavy(g, f)?;
        check_in_f2(g, budget)?;
        check_no_star_cutset(g)?;
        check_unbalanced(g, w, 4, budget)?;
    } else if !f.is_seagull_in(g) {
        return Err(Error::InvalidParameters(format!("{}-{}-{} is not an induced path", f.a, f.v, f.u)));
    }
    let index = PairIndex::new(g, w, pool);
    breaking_pair_with_index(g, w, f, &index, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete_bipartite, cycle, subdivide, theta};
    use crate::cutsets::clique_pool;
    use crate::graph::Graph;

    fn sg(a: usize, v: usize, u: usize) -> Seagull {
        Seagull { a, v, u }
    }

    #[test]
    fn theta_in_k23() {
        let g = complete_bipartite(2, 3);
        let t = find_theta_through(&g, sg(0, 2, 1), &mut Budget::default()).unwrap().unwrap();
        assert_eq!((t.a(), t.b), (0, 1));
        assert_eq!(t.vertex_set(), g.vertices());
        assert!(t.validate(&g));
    }

    #[test]
    fn no_theta_in_cycle() {
        let g = cycle(9);
        assert!(find_theta_through(&g, sg(0, 1, 2), &mut Budget::default()).unwrap().is_none());
    }

    #[test]
    fn theta_in_subdivided_k4() {
        let k4 = Graph::complete(4).unwrap();
        let g = subdivide(&k4, &[2, 3, 2, 2, 3, 2]).unwrap();
        let f = sg(0, g.neighbors(0).min().unwrap(), 0);
        let u = g.neighbors(f.v).without(0).min().unwrap();
        let f = Seagull { u, ..f };
        let t = find_theta_through(&g, f, &mut Budget::default()).unwrap().unwrap();
        assert!(t.validate(&g));
        assert_eq!(t.a(), 0);
    }

    #[test]
    fn theta_minimises_first_path() {
        let g = theta(4, 3, 5).unwrap();
        let n1 = g.neighbors(0);
        for v in n1 {
            let Some(u) = g.neighbors(v).without(0).min() else { continue };
            let t = find_theta_through(&g, sg(0, v, u), &mut Budget::default()).unwrap().unwrap();
            assert!(t.validate(&g));
            assert_eq!(t.b, 1);
        }
    }

    #[test]
    fn invalid_seagull() {
        let g = cycle(5);
        assert!(find_theta_through(&g, sg(0, 2, 4), &mut Budget::default()).is_err());
    }

    #[test]
    fn require_rejects_star_cutset_and_balanced() {
        let g = complete_bipartite(2, 3);
        let w = WeightFunction::uniform(5).unwrap();
        let pool = clique_pool(&g, 2);
        let e = breaking_pair(&g, &w, sg(0, 2, 1), &pool, HypothesisPolicy::Require, &mut Budget::default());
        assert!(matches!(e, Err(Error::HypothesisViolated { .. })));
    }
}
