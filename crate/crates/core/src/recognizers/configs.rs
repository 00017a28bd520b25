//! Named induced configurations: diamond, theta, pyramid, prism and the
//! hole-plus-vertex configurations.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, Path};
use crate::recognizers::holes::{for_each_hole, Hole};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConfigurationKind {
    Diamond,
    Theta,
    Pyramid,
    Prism,
    /// A hole and an outside vertex with at least two neighbours in it.
    T1Wheel,
    /// A hole and an outside vertex with two non-adjacent neighbours in it.
    T2Wheel,
    /// A hole and an outside vertex with at least three neighbours in it.
    Wheel,
}

impl ConfigurationKind {
    /// The six kinds with brute-force counterparts in the test suites.
    pub const CORE: [ConfigurationKind; 6] = [
        ConfigurationKind::Diamond,
        ConfigurationKind::Theta,
        ConfigurationKind::Pyramid,
        ConfigurationKind::Prism,
        ConfigurationKind::T1Wheel,
        ConfigurationKind::T2Wheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::Diamond => "diamond",
            ConfigurationKind::Theta => "theta",
            ConfigurationKind::Pyramid => "pyramid",
            ConfigurationKind::Prism => "prism",
            ConfigurationKind::T1Wheel => "t1-wheel",
            ConfigurationKind::T2Wheel => "t2-wheel",
            ConfigurationKind::Wheel => "wheel",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            ConfigurationKind::Diamond,
            ConfigurationKind::Theta,
            ConfigurationKind::Pyramid,
            ConfigurationKind::Prism,
            ConfigurationKind::T1Wheel,
            ConfigurationKind::T2Wheel,
            ConfigurationKind::Wheel,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Role assignment of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Roles {
    /// `a c` is the edge whose ends have degree three; `b d` is the
    /// missing edge.
    Diamond { a: usize, b: usize, c: usize, d: usize },
    /// Three paths from `ends.0` to `ends.1`.
    Theta { ends: (usize, usize), paths: [Path; 3] },
    /// Path `i` runs from `apex` to `triangle[i]`.
    Pyramid { apex: usize, triangle: [usize; 3], paths: [Path; 3] },
    /// Path `i` runs from `first[i]` to `second[i]`.
    Prism { first: [usize; 3], second: [usize; 3], paths: [Path; 3] },
    /// A hole and a vertex outside it.
    Wheel { hole: Hole, center: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationWitness {
    pub kind: ConfigurationKind,
    pub vertices: VertexSet,
    pub roles: Roles,
}

impl ConfigurationWitness {
    /// Re-checks the witness against the definition of its kind.
    pub fn validate(&self, g: &Graph) -> bool {
        match (&self.kind, &self.roles) {
            (ConfigurationKind::Diamond, Roles::Diamond { a, b, c, d }) => {
                let set: VertexSet = [*a, *b, *c, *d].iter().collect();
                set.len() == 4
                    && set == self.vertices
                    && g.has_edge(*a, *c)
                    && !g.has_edge(*b, *d)
                    && [*b, *d].iter().all(|&x| g.has_edge(x, *a) && g.has_edge(x, *c))
            }
            (ConfigurationKind::Theta, Roles::Theta { ends, paths }) => {
                let (a, b) = *ends;
                let mut expected = BTreeSet::new();
                for p in paths {
                    if p.first() != a || p.last() != b || p.length() < 2 || !p.is_induced_in(g) {
                        return false;
                    }
                    add_path_edges(&mut expected, p);
                }
                disjoint_interiors(paths) && self.matches_edges(g, &expected, paths)
            }
            (ConfigurationKind::Pyramid, Roles::Pyramid { apex, triangle, paths }) => {
                let mut expected = BTreeSet::new();
                add_triangle(&mut expected, triangle);
                for (i, p) in paths.iter().enumerate() {
                    if p.first() != *apex || p.last() != triangle[i] || !p.is_induced_in(g) {
                        return false;
                    }
                    add_path_edges(&mut expected, p);
                }
                let ones = paths.iter().filter(|p| p.length() == 1).count();
                let own: VertexSet = triangle.iter().collect();
                ones <= 1
                    && own.len() == 3
                    && !own.contains(*apex)
                    && disjoint_except(paths, VertexSet::singleton(*apex))
                    && self.matches_edges(g, &expected, paths)
            }
            (ConfigurationKind::Prism, Roles::Prism { first, second, paths }) => {
                let mut expected = BTreeSet::new();
                add_triangle(&mut expected, first);
                add_triangle(&mut expected, second);
                for (i, p) in paths.iter().enumerate() {
                    if p.first() != first[i] || p.last() != second[i] || !p.is_induced_in(g) {
                        return false;
                    }
                    add_path_edges(&mut expected, p);
                }
                let tri: VertexSet = first.iter().chain(second.iter()).collect();
                tri.len() == 6
                    && disjoint_except(paths, VertexSet::EMPTY)
                    && self.matches_edges(g, &expected, paths)
            }
            (kind, Roles::Wheel { hole, center }) => {
                let hs = hole.vertex_set();
                if Hole::new(g, hole.vertices().to_vec()).is_err()
                    || hs.contains(*center)
                    || self.vertices != hs.with(*center)
                {
                    return false;
                }
                let nb = g.neighbors(*center).intersection(hs);
                match kind {
                    ConfigurationKind::T1Wheel => nb.len() >= 2,
                    ConfigurationKind::T2Wheel => has_nonadjacent_pair(g, nb),
                    ConfigurationKind::Wheel => nb.len() >= 3,
                    _ => false,
                }
            }
            _ => false,
        }
    }

    fn matches_edges(&self, g: &Graph, expected: &BTreeSet<(usize, usize)>, paths: &[Path; 3]) -> bool {
        let union: VertexSet = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()));
        if union != self.vertices {
            return false;
        }
        let actual: BTreeSet<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| union.contains(u) && union.contains(v))
            .collect();
        &actual == expected
    }
}

fn add_path_edges(edges: &mut BTreeSet<(usize, usize)>, p: &Path) {
    for w in p.vertices().windows(2) {
        edges.insert((w[0].min(w[1]), w[0].max(w[1])));
    }
}

fn add_triangle(edges: &mut BTreeSet<(usize, usize)>, t: &[usize; 3]) {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        edges.insert((t[i].min(t[j]), t[i].max(t[j])));
    }
}

fn disjoint_interiors(paths: &[Path; 3]) -> bool {
    let total: usize = paths.iter().map(|p| p.interior().len()).sum();
    let union = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.interior()));
    union.len() == total
}

fn disjoint_except(paths: &[Path; 3], shared: VertexSet) -> bool {
    let sets: Vec<VertexSet> = paths.iter().map(|p| p.vertex_set().difference(shared)).collect();
    let total: usize = sets.iter().map(|s| s.len()).sum();
    let union = sets.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
    union.len() == total
}

pub(crate) fn has_nonadjacent_pair(g: &Graph, x: VertexSet) -> bool {
    x.iter().any(|u| !x.without(u).is_subset(g.neighbors(u)))
}

/// All induced paths from `a` to `b` whose interior lies in `interior`,
/// ordered by length and then lexicographically.
pub fn induced_paths(
    g: &Graph,
    a: usize,
    b: usize,
    interior: VertexSet,
    budget: &mut Budget,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    if g.has_edge(a, b) {
        out.push(Path::new_unchecked(vec![a, b]));
        return Ok(out);
    }
    let interior = interior.without(a).without(b);
    let mut path = vec![a];
    fn rec(
        g: &Graph,
        b: usize,
        interior: VertexSet,
        blocked: VertexSet,
        path: &mut Vec<usize>,
        budget: &mut Budget,
        out: &mut Vec<Path>,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        for x in g.neighbors(last).intersection(interior).difference(blocked) {
            budget.tick()?;
            path.push(x);
            if g.has_edge(x, b) {
                path.push(b);
                out.push(Path::new_unchecked(path.clone()));
                path.pop();
            } else {
                let next = blocked.union(g.closed_neighbors(last));
                rec(g, b, interior, next, path, budget, out)?;
            }
            path.pop();
        }
        Ok(())
    }
    rec(g, b, interior, VertexSet::singleton(a), &mut path, budget, &mut out)?;
    out.sort_by(|p, q| p.length().cmp(&q.length()).then_with(|| p.vertices().cmp(q.vertices())));
    Ok(out)
}

/// Pairwise compatibility of path interiors: disjoint and anticomplete.
fn compatible(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    g.closed_neighborhood(x).is_disjoint(y)
}

/// First triple `i < j < k` of pairwise compatible paths, with an optional
/// extra predicate on the triple.
fn pick_triple<F>(g: &Graph, paths: &[Path], budget: &mut Budget, extra: F) -> Result<Option<[Path; 3]>>
where
    F: Fn(&[&Path; 3]) -> bool,
{
    let inner: Vec<VertexSet> = paths.iter().map(|p| p.interior()).collect();
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            budget.tick()?;
            if !compatible(g, inner[i], inner[j]) {
                continue;
            }
            for k in j + 1..paths.len() {
                budget.tick()?;
                if compatible(g, inner[i], inner[k])
                    && compatible(g, inner[j], inner[k])
                    && extra(&[&paths[i], &paths[j], &paths[k]])
                {
                    return Ok(Some([paths[i].clone(), paths[j].clone(), paths[k].clone()]));
                }
            }
        }
    }
    Ok(None)
}

/// Picks one path from each of three lists, pairwise compatible.
fn pick_one_each<F>(g: &Graph, lists: [&[Path]; 3], budget: &mut Budget, extra: F) -> Result<Option<[Path; 3]>>
where
    F: Fn(&[&Path; 3]) -> bool,
{
    for p in lists[0] {
        let ip = p.interior();
        for q in lists[1] {
            budget.tick()?;
            let iq = q.interior();
            if !compatible(g, ip, iq) {
                continue;
            }
            for r in lists[2] {
                budget.tick()?;
                let ir = r.interior();
                if compatible(g, ip, ir) && compatible(g, iq, ir) && extra(&[p, q, r]) {
                    return Ok(Some([p.clone(), q.clone(), r.clone()]));
                }
            }
        }
    }
    Ok(None)
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in g.neighbors(u).intersection(g.neighbors(v)) {
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out
}

fn find_diamond(g: &Graph) -> Option<ConfigurationWitness> {
    for (a, c) in g.edges() {
        let common = g.neighbors(a).intersection(g.neighbors(c));
        for b in common {
            if let Some(d) = common.difference(g.closed_neighbors(b)).iter().find(|&d| d > b) {
                return Some(ConfigurationWitness {
                    kind: ConfigurationKind::Diamond,
                    vertices: [a, b, c, d].iter().collect(),
                    roles: Roles::Diamond { a, b, c, d },
                });
            }
        }
    }
    None
}

fn find_theta(g: &Graph, budget: &mut Budget) -> Result<Option<ConfigurationWitness>> {
    let n = g.n();
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            if g.degree(b) < 3 || g.has_edge(a, b) {
                continue;
            }
            let paths = induced_paths(g, a, b, g.vertices(), budget)?;
            if let Some(triple) = pick_triple(g, &paths, budget, |_| true)? {
                return Ok(Some(theta_witness(a, b, triple)));
            }
        }
    }
    Ok(None)
}

pub(crate) fn theta_witness(a: usize, b: usize, paths: [Path; 3]) -> ConfigurationWitness {
    let vertices = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()));
    ConfigurationWitness {
        kind: ConfigurationKind::Theta,
        vertices,
        roles: Roles::Theta { ends: (a, b), paths },
    }
}

fn find_pyramid(g: &Graph, budget: &mut Budget) -> Result<Option<ConfigurationWitness>> {
    for tri in triangles(g) {
        let t: VertexSet = tri.iter().collect();
        for apex in g.vertices().difference(t) {
            if g.neighbors(apex).intersection(t).len() > 1 {
                continue;
            }
            let mut lists: Vec<Vec<Path>> = Vec::with_capacity(3);
            for i in 0..3 {
                let others = t.without(tri[i]);
                let allowed = g
                    .vertices()
                    .difference(t)
                    .without(apex)
                    .difference(g.closed_neighborhood(others));
                lists.push(induced_paths(g, apex, tri[i], allowed, budget)?);
            }
            if lists.iter().any(|l| l.is_empty()) {
                continue;
            }
            let found = pick_one_each(g, [&lists[0], &lists[1], &lists[2]], budget, |_| true)?;
            if let Some(paths) = found {
                let vertices = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()));
                return Ok(Some(ConfigurationWitness {
                    kind: ConfigurationKind::Pyramid,
                    vertices,
                    roles: Roles::Pyramid { apex, triangle: tri, paths },
                }));
            }
        }
    }
    Ok(None)
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn find_prism(g: &Graph, budget: &mut Budget) -> Result<Option<ConfigurationWitness>> {
    let tris = triangles(g);
    for (i, ta) in tris.iter().enumerate() {
        let sa: VertexSet = ta.iter().collect();
        for tb in &tris[i + 1..] {
            let sb: VertexSet = tb.iter().collect();
            if sa.intersects(sb) {
                continue;
            }
            for perm in PERMUTATIONS {
                let second = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                let cross_ok = (0..3).all(|x| {
                    (0..3).all(|y| x == y || !g.has_edge(ta[x], second[y]))
                });
                if !cross_ok {
                    continue;
                }
                let both = sa.union(sb);
                let mut lists: Vec<Vec<Path>> = Vec::with_capacity(3);
                for k in 0..3 {
                    budget.tick()?;
                    let others = both.without(ta[k]).without(second[k]);
                    let allowed = g.vertices().difference(both).difference(g.closed_neighborhood(others));
                    lists.push(induced_paths(g, ta[k], second[k], allowed, budget)?);
                }
                if lists.iter().any(|l| l.is_empty()) {
                    continue;
                }
                let found = pick_one_each(g, [&lists[0], &lists[1], &lists[2]], budget, |_| true)?;
                if let Some(paths) = found {
                    let vertices = paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()));
                    return Ok(Some(ConfigurationWitness {
                        kind: ConfigurationKind::Prism,
                        vertices,
                        roles: Roles::Prism { first: *ta, second, paths },
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn find_hole_vertex(
    g: &Graph,
    kind: ConfigurationKind,
    budget: &mut Budget,
) -> Result<Option<ConfigurationWitness>> {
    let mut found = None;
    let _ = for_each_hole(g, None, budget, |h| {
        let hs: VertexSet = h.iter().collect();
        for v in g.vertices().difference(hs) {
            let nb = g.neighbors(v).intersection(hs);
            let hit = match kind {
                ConfigurationKind::T1Wheel => nb.len() >= 2,
                ConfigurationKind::T2Wheel => has_nonadjacent_pair(g, nb),
                _ => nb.len() >= 3,
            };
            if hit {
                found = Some(ConfigurationWitness {
                    kind,
                    vertices: hs.with(v),
                    roles: Roles::Wheel {
                        hole: Hole::new(g, h.to_vec()).expect("enumerated holes are induced"),
                        center: v,
                    },
                });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Searches exhaustively for an induced configuration of the given kind.
pub fn find_configuration(
    g: &Graph,
    kind: ConfigurationKind,
    budget: &mut Budget,
) -> Result<Option<ConfigurationWitness>> {
    match kind {
        ConfigurationKind::Diamond => Ok(find_diamond(g)),
        ConfigurationKind::Theta => find_theta(g, budget),
        ConfigurationKind::Pyramid => find_pyramid(g, budget),
        ConfigurationKind::Prism => find_prism(g, budget),
        ConfigurationKind::T1Wheel | ConfigurationKind::T2Wheel | ConfigurationKind::Wheel => {
            find_hole_vertex(g, kind, budget)
        }
    }
}

/// A hole and a vertex with at least three neighbours in it, if any.
pub fn find_wheel(g: &Graph, budget: &mut Budget) -> Result<Option<ConfigurationWitness>> {
    find_configuration(g, ConfigurationKind::Wheel, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete, complete_bipartite, cycle, prism, pyramid, theta};

    fn find(g: &Graph, kind: ConfigurationKind) -> Option<ConfigurationWitness> {
        find_configuration(g, kind, &mut Budget::default()).unwrap()
    }

    #[test]
    fn diamond_in_k4_minus_edge() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let w = find(&g, ConfigurationKind::Diamond).unwrap();
        assert!(w.validate(&g));
        assert_eq!(w.roles, Roles::Diamond { a: 0, b: 1, c: 2, d: 3 });
        assert!(find(&complete(4), ConfigurationKind::Diamond).is_none());
    }

    #[test]
    fn theta_in_k23() {
        let g = complete_bipartite(2, 3);
        let w = find(&g, ConfigurationKind::Theta).unwrap();
        assert!(w.validate(&g));
        match w.roles {
            Roles::Theta { ends, .. } => assert_eq!(ends, (0, 1)),
            _ => unreachable!(),
        }
        assert!(find(&cycle(6), ConfigurationKind::Theta).is_none());
    }

    #[test]
    fn t2_wheel_on_c6() {
        let mut edges: Vec<_> = cycle(6).edges().collect();
        edges.extend([(0, 6), (3, 6)]);
        let g = Graph::from_edges(7, edges).unwrap();
        let w = find(&g, ConfigurationKind::T2Wheel).unwrap();
        assert!(w.validate(&g));
        match &w.roles {
            Roles::Wheel { hole, center } => {
                assert_eq!(*center, 6);
                assert_eq!(hole.vertices(), &[0, 1, 2, 3, 4, 5]);
            }
            _ => unreachable!(),
        }
        assert!(find(&g, ConfigurationKind::Wheel).is_none());
    }

    #[test]
    fn generated_configurations_are_found() {
        for (l1, l2, l3) in [(2, 2, 2), (2, 3, 4), (3, 3, 3)] {
            let g = theta(l1, l2, l3).unwrap();
            let w = find(&g, ConfigurationKind::Theta).unwrap();
            assert!(w.validate(&g));
            assert_eq!(w.vertices, g.vertices());
        }
        for (l1, l2, l3) in [(1, 1, 1), (1, 2, 3), (2, 2, 2)] {
            let g = prism(l1, l2, l3).unwrap();
            let w = find(&g, ConfigurationKind::Prism).unwrap();
            assert!(w.validate(&g));
            assert!(find(&g, ConfigurationKind::Pyramid).is_none());
        }
        for (l1, l2, l3) in [(1, 2, 2), (2, 2, 2), (3, 2, 4)] {
            let g = pyramid(l1, l2, l3).unwrap();
            let w = find(&g, ConfigurationKind::Pyramid).unwrap();
            assert!(w.validate(&g));
            assert!(find(&g, ConfigurationKind::Prism).is_none());
        }
    }

    #[test]
    fn induced_paths_in_cycle() {
        let g = cycle(6);
        let ps = induced_paths(&g, 0, 3, g.vertices(), &mut Budget::default()).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].vertices(), &[0, 1, 2, 3]);
        assert_eq!(ps[1].vertices(), &[0, 5, 4, 3]);
    }

    #[test]
    fn invalid_witness_is_rejected() {
        let g = complete_bipartite(2, 3);
        let mut w = find(&g, ConfigurationKind::Theta).unwrap();
        w.vertices = w.vertices.without(4);
        assert!(!w.validate(&g));
    }
}
