//! Brute-force oracles shared by the integration tests. They work from
//! adjacency lists and subset enumeration and call no library search.
#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use hollow_tw_core::corpus::iso::{canonical_form, graph_key};
use hollow_tw_core::cutsets::CliquePair;
use hollow_tw_core::recognizers::ConfigurationKind;
use hollow_tw_core::weights::WeightFunction;
use hollow_tw_core::{Graph, VertexSet};

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Components of `G[alive]` by depth-first search, as sorted vertex lists.
pub fn components(g: &Graph, alive: VertexSet) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] || !alive.contains(s) {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if alive.contains(u) && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn connected(g: &Graph, x: VertexSet) -> bool {
    components(g, x).len() <= 1
}

/// Every subset of `x`.
pub fn subsets_of(x: VertexSet) -> Vec<VertexSet> {
    let items = x.to_vec();
    (0u64..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

pub fn subsets_up_to(x: VertexSet, k: usize) -> Vec<VertexSet> {
    let items = x.to_vec();
    let mut out = vec![VertexSet::EMPTY];
    let mut frontier = vec![(VertexSet::EMPTY, 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (s, from) in frontier {
            for (i, &v) in items.iter().enumerate().skip(from) {
                let t = s.with(v);
                out.push(t);
                next.push((t, i + 1));
            }
        }
        frontier = next;
    }
    out
}

pub fn is_clique(g: &Graph, x: VertexSet) -> bool {
    let v = x.to_vec();
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn cliques(g: &Graph, max: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = subsets_up_to(g.vertices(), max)
        .into_iter()
        .filter(|x| !x.is_empty() && is_clique(g, *x))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    out
}

/// Vertex sets of holes: at least four vertices, connected, every vertex
/// with exactly two neighbours inside.
pub fn holes(g: &Graph) -> Vec<VertexSet> {
    subsets_of(g.vertices())
        .into_iter()
        .filter(|x| {
            x.len() >= 4 && connected(g, *x) && x.iter().all(|v| g.neighbors(v).intersection(*x).len() == 2)
        })
        .collect()
}

pub fn sparse(g: &Graph) -> bool {
    holes(g).into_iter().all(|h| {
        g.vertices().difference(h).iter().all(|v| {
            let nb = g.neighbors(v).intersection(h);
            is_clique(g, nb)
        })
    })
}

/// A star cutset: `C` with some `v ∈ C ⊆ N[v]` and `G ∖ C` disconnected.
pub fn has_star_cutset(g: &Graph) -> bool {
    g.vertices().iter().any(|v| {
        subsets_of(g.neighbors(v)).into_iter().any(|s| {
            let rest = g.vertices().difference(s.with(v));
            components(g, rest).len() >= 2
        })
    })
}

pub fn has_clique_cutset(g: &Graph) -> bool {
    cliques(g, g.n()).into_iter().chain([VertexSet::EMPTY]).any(|c| {
        let rest = g.vertices().difference(c);
        components(g, rest).len() >= 2
    })
}

/// Every component of `G ∖ x` has weight at most 1/2, with exact integer
/// masses: `2 · mass(D) ≤ denom`.
pub fn balanced(g: &Graph, w: &WeightFunction, x: VertexSet) -> bool {
    components(g, g.vertices().difference(x))
        .into_iter()
        .all(|d| 2 * d.iter().map(|&v| w.mass(v)).sum::<u128>() <= w.denom())
}

/// No `(w, 1/2)`-balanced separator with at most `d` vertices.
pub fn unbalanced(g: &Graph, w: &WeightFunction, d: usize) -> bool {
    subsets_up_to(g.vertices(), d).into_iter().all(|x| !balanced(g, w, x))
}

/// Treewidth as the minimum over all elimination orderings of the largest
/// later-neighbourhood, for `n ≤ 8`.
pub fn treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 8, "brute-force treewidth is for tiny graphs");
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = n - 1;
    permute(&mut order, 0, &mut |ord| {
        let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
        let mut width = 0;
        let mut gone = VertexSet::EMPTY;
        for &v in ord {
            let nb = adj[v].difference(gone);
            width = width.max(nb.len());
            for u in nb {
                adj[u] = adj[u].union(nb).without(u);
            }
            gone.insert(v);
        }
        best = best.min(width);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// A graph from path vertex sequences.
fn from_paths(n: usize, paths: &[Vec<usize>], extra: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = paths.iter().flat_map(|p| p.windows(2).map(|e| (e[0], e[1]))).collect();
    edges.extend_from_slice(extra);
    Graph::from_edges(n, edges).unwrap()
}

/// A path from `s` to `t` of the given length through fresh vertices.
fn fresh_path(s: usize, t: usize, len: usize, next: &mut usize) -> Vec<usize> {
    let mut p = vec![s];
    for _ in 1..len {
        p.push(*next);
        *next += 1;
    }
    p.push(t);
    p
}

fn theta_pattern(l: [usize; 3]) -> Graph {
    let mut next = 2;
    let paths: Vec<_> = l.iter().map(|&len| fresh_path(0, 1, len, &mut next)).collect();
    from_paths(next, &paths, &[])
}

fn pyramid_pattern(l: [usize; 3]) -> Graph {
    let mut next = 4;
    let paths: Vec<_> = l.iter().enumerate().map(|(i, &len)| fresh_path(0, i + 1, len, &mut next)).collect();
    from_paths(next, &paths, &[(1, 2), (2, 3), (1, 3)])
}

fn prism_pattern(l: [usize; 3]) -> Graph {
    let mut next = 6;
    let paths: Vec<_> = l.iter().enumerate().map(|(i, &len)| fresh_path(i, i + 3, len, &mut next)).collect();
    from_paths(next, &paths, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
}

/// A `k`-hole on `0..k` plus vertex `k` adjacent to the hole vertices in
/// `mask`.
fn hole_vertex_pattern(k: usize, mask: u32) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k)));
    Graph::from_edges(k + 1, edges).unwrap()
}

fn key(g: &Graph) -> (usize, u128) {
    (g.n(), graph_key(&canonical_form(g)))
}

/// Canonical keys of every graph of `kind` on at most `max_n` vertices.
pub fn patterns(kind: ConfigurationKind, max_n: usize) -> HashSet<(usize, u128)> {
    let mut out = Vec::new();
    match kind {
        ConfigurationKind::Diamond => {
            out.push(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap());
        }
        ConfigurationKind::Theta => {
            for a in 2..max_n {
                for b in a..max_n {
                    for c in b..max_n {
                        out.push(theta_pattern([a, b, c]));
                    }
                }
            }
        }
        ConfigurationKind::Pyramid => {
            for a in 1..max_n {
                for b in a.max(2)..max_n {
                    for c in b..max_n {
                        out.push(pyramid_pattern([a, b, c]));
                    }
                }
            }
        }
        ConfigurationKind::Prism => {
            for a in 1..max_n {
                for b in a..max_n {
                    for c in b..max_n {
                        out.push(prism_pattern([a, b, c]));
                    }
                }
            }
        }
        ConfigurationKind::T1Wheel | ConfigurationKind::T2Wheel | ConfigurationKind::Wheel => {
            for k in 4..max_n {
                for mask in 0..1u32 << k {
                    let nbrs: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                    let nonadjacent_pair = nbrs
                        .iter()
                        .any(|&i| nbrs.iter().any(|&j| i < j && j - i != 1 && j - i != k - 1));
                    let keep = match kind {
                        ConfigurationKind::T1Wheel => nbrs.len() >= 2,
                        ConfigurationKind::T2Wheel => nonadjacent_pair,
                        _ => nbrs.len() >= 3,
                    };
                    if keep {
                        out.push(hole_vertex_pattern(k, mask));
                    }
                }
            }
        }
    }
    out.into_iter().filter(|g| g.n() <= max_n).map(|g| key(&g)).collect()
}

/// Canonical keys of all induced subgraphs of `G` with at least four
/// vertices.
pub fn induced_keys(g: &Graph) -> HashSet<(usize, u128)> {
    subsets_of(g.vertices()).into_iter().filter(|x| x.len() >= 4).map(|x| key(&g.induced_subgraph(x).0)).collect()
}

/// `G` has an induced subgraph whose canonical key is in `patterns`.
pub fn contains_induced(g: &Graph, patterns: &HashSet<(usize, u128)>) -> bool {
    !induced_keys(g).is_disjoint(patterns)
}

/// Component of `G ∖ (K1 ∪ K2)` with more than half the weight, and the
/// rest of `G ∖ (K1 ∪ K2)`.
pub fn canonical_sides(g: &Graph, w: &WeightFunction, c: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let rest = g.vertices().difference(c);
    let heavy = components(g, rest)
        .into_iter()
        .map(|d| d.iter().collect::<VertexSet>())
        .find(|d| 2 * d.iter().map(|v| w.mass(v)).sum::<u128>() > w.denom())?;
    Some((rest.difference(heavy), heavy))
}

/// `d1` and `d2` avoid `removed` and no component of `G ∖ removed` meets
/// both.
pub fn separated(g: &Graph, removed: VertexSet, d1: VertexSet, d2: VertexSet) -> bool {
    if d1.intersects(removed) || d2.intersects(removed) {
        return false;
    }
    components(g, g.vertices().difference(removed)).into_iter().all(|comp| {
        let c: VertexSet = comp.iter().collect();
        !(c.intersects(d1) && c.intersects(d2))
    })
}

/// A cube or a prism over `C_5`/`C_6` with heavy masses, plus light
/// appendages between two far-apart cliques of the core.
pub fn cored_instance(rng: &mut ChaCha8Rng) -> (Graph, WeightFunction) {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let core = match rng.random_range(0..3) {
        0 => {
            edges.extend((0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ 1 << b))).filter(|&(u, v)| u < v));
            8
        }
        r => {
            let k = 4 + r;
            edges.extend((0..k).flat_map(|i| [(i, (i + 1) % k), (k + i, k + (i + 1) % k), (i, k + i)]));
            2 * k
        }
    };
    let base = Graph::from_edges(core, edges.clone()).expect("simple");
    let mut n = core;
    let budget = 14 - core;
    let x = rng.random_range(0..core);
    let dist = base.distances(VertexSet::singleton(x), base.vertices());
    let far: Vec<usize> = (0..core).filter(|&y| dist[y] >= 3).collect();
    let y = *far.choose(rng).unwrap_or(&((x + core / 2) % core));
    let mut k1 = vec![x];
    let mut k2 = vec![y];
    if rng.random_bool(0.3) {
        k1.push(*base.neighbors(x).to_vec().choose(rng).expect("core is 3-regular"));
    }
    if rng.random_bool(0.3) {
        let options: Vec<usize> = base.neighbors(y).iter().filter(|v| !k1.contains(v)).collect();
        if let Some(&v) = options.choose(rng) {
            k2.push(v);
        }
    }
    let mut used = 0;
    while used + 2 <= budget && (used == 0 || rng.random_bool(0.6)) {
        let len = rng.random_range(2..=(budget - used).min(3));
        let path: Vec<usize> = (n..n + len).collect();
        edges.extend(path.windows(2).map(|e| (e[0], e[1])));
        edges.extend(k1.iter().map(|&v| (v, path[0])));
        edges.extend(k2.iter().map(|&v| (v, path[len - 1])));
        if used + len < budget && rng.random_bool(0.3) {
            edges.extend([(path[0], n + len), (path[1], n + len)]);
            used += 1;
            n += 1;
        }
        n += len;
        used += len;
    }
    let g = Graph::from_edges(n, edges).expect("simple");
    let mass: Vec<u128> =
        (0..n).map(|v| if v < core { rng.random_range(10..=20) } else { rng.random_range(0..=2) }).collect();
    (g, WeightFunction::from_masses(mass).expect("positive total"))
}

/// `C_k` on `0..k` with the arc `0..=k/2` light. Appendages hang off
/// consecutive intervals of the light arc; each interval gives one pair of
/// cliques of size one or two. Cut points are pairwise non-adjacent.
pub fn appendage_instance(rng: &mut ChaCha8Rng) -> (Graph, WeightFunction, Vec<CliquePair>) {
    let k = rng.random_range(8..=14);
    let light = k / 2;
    let cuts = rng.random_range(2..=4usize).min((light + 2) / 2);
    let mut points: Vec<usize> =
        (0..=light + 1 - cuts).collect::<Vec<_>>().choose_multiple(rng, cuts).copied().collect();
    points.sort_unstable();
    // spread so that consecutive cut points are never adjacent
    for (i, p) in points.iter_mut().enumerate() {
        *p += i;
    }
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut n = k;
    let mut pairs = Vec::new();
    for win in points.windows(2) {
        let (x, y) = (win[0], win[1]);
        let mut k1 = VertexSet::singleton(x);
        let mut k2 = VertexSet::singleton(y);
        if y > x + 2 && rng.random_bool(0.5) {
            k1.insert(x + 1);
        }
        if y - 1 > k1.max().unwrap() + 1 && rng.random_bool(0.5) {
            k2.insert(y - 1);
        }
        for _ in 0..rng.random_range(1..=2) {
            let len = rng.random_range(1..=3);
            let path: Vec<usize> = (n..n + len).collect();
            n += len;
            edges.extend(path.windows(2).map(|e| (e[0], e[1])));
            edges.extend(k1.iter().map(|v| (v, path[0])));
            edges.extend(k2.iter().map(|v| (v, path[len - 1])));
        }
        pairs.push((k1, k2));
    }
    let g = Graph::from_edges(n, edges).expect("simple");
    let mut mass: Vec<u128> = (0..n).map(|v| if v > light && v < k { rng.random_range(20..=60) } else { rng.random_range(0..=5) }).collect();
    let heavy: u128 = (light + 1..k).map(|v| mass[v]).sum();
    let total: u128 = mass.iter().sum();
    if 2 * heavy <= total {
        mass[light + 1] += total - 2 * heavy + 1;
    }
    let w = WeightFunction::from_masses(mass).expect("positive total");
    let pairs = pairs.into_iter().map(|(a, b)| CliquePair::new(&g, a, b, Some(2)).expect("cliques")).collect();
    (g, w, pairs)
}

pub fn c8_appendage() -> (Graph, WeightFunction, Vec<CliquePair>) {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend([(0, 8), (8, 9), (9, 3)]);
    let g = Graph::from_edges(10, edges).expect("simple");
    // 1/40 on 0..4, 3/20 on 4..10
    let mass = [1, 1, 1, 1, 6, 6, 6, 6, 6, 6].to_vec();
    let w = WeightFunction::from_masses(mass).expect("positive total");
    let pair = CliquePair::new(&g, VertexSet::singleton(0), VertexSet::singleton(3), Some(2)).expect("cliques");
    (g, w, vec![pair])
}

/// Graphs on `min_n..=max_n` vertices, each edge present with probability
/// `density`.
pub fn graphs(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(move |n| (Just(n), proptest::collection::vec(proptest::bool::weighted(density), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
}

/// Connected graphs: a random spanning tree plus edges with probability
/// `density`.
pub fn connected_graphs(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n.max(1)..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                proptest::collection::vec(any::<proptest::sample::Index>(), n - 1),
                proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, bits)| {
            let tree = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1));
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let extra = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            let edges: std::collections::BTreeSet<(usize, usize)> =
                tree.chain(extra).map(|(u, v)| (u.min(v), u.max(v))).collect();
            Graph::from_edges(n, edges).unwrap()
        })
}
