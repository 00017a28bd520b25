mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hollow_tw_core::central_bag::{build_central_bag, PiOrder};
use hollow_tw_core::corpus::generators::theta;
use hollow_tw_core::corpus::sample::random_connected_class_sample;
use hollow_tw_core::graph::clique_number;
use hollow_tw_core::pipeline::{decompose, BlockOutcome, PipelineOptions};
use hollow_tw_core::recognizers::{class_membership, heavy_seagulls, GraphClass};
use hollow_tw_core::seagull::find_theta_through;
use hollow_tw_core::weights::WeightFunction;
use hollow_tw_core::{Budget, Graph, VertexSet};

fn sample(n: usize, class: GraphClass, seed: u64) -> Option<Graph> {
    random_connected_class_sample(n, class, seed, 400, &mut Budget::unlimited()).unwrap()
}

/// Some path from `from` to a vertex of `targets` has all its interior
/// vertices outside `blocked`.
fn escapes(g: &Graph, from: usize, targets: VertexSet, blocked: VertexSet) -> bool {
    if g.neighbors(from).intersects(targets) {
        return true;
    }
    let open = g.vertices().difference(blocked).without(from);
    g.neighbors(from)
        .intersection(open)
        .iter()
        .any(|x| g.neighborhood(g.component_of(open, x)).union(g.component_of(open, x)).intersects(targets))
}

/// A theta with long paths plus a few extra vertices, each joined to one
/// or two existing vertices, when the result is triangle-free and very
/// sparse.
fn decorated_theta(rng: &mut ChaCha8Rng) -> Option<Graph> {
    use rand::Rng;
    let base = theta(rng.random_range(3..=5), rng.random_range(3..=5), rng.random_range(3..=5)).unwrap();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut n = base.n();
    for _ in 0..rng.random_range(1..=4) {
        let first = rng.random_range(0..n);
        edges.push((first, n));
        if rng.random_bool(0.6) {
            let second = rng.random_range(0..n);
            if second != first {
                edges.push((second, n));
            }
        }
        n += 1;
    }
    let g = Graph::from_edges(n, edges).unwrap();
    class_membership(&g, 2, &mut Budget::unlimited()).unwrap().in_f_2.then_some(g)
}

/// With a theta through `a - v - u` whose first path is shortest, every
/// path from `u` back to the other two paths away from `N[b]` passes
/// through `N[b] ∪ N[v]`.
#[test]
fn shortest_theta_through_seagull_is_not_bypassed() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut graphs, mut thetas) = (0, 0);
    for _ in 0..400 {
        let Some(g) = decorated_theta(&mut rng) else {
            continue;
        };
        graphs += 1;
        for f in heavy_seagulls(&g) {
            for f in [f, f.reversed()] {
                let Some(theta) = find_theta_through(&g, f, &mut Budget::unlimited()).unwrap() else {
                    continue;
                };
                thetas += 1;
                assert!(theta.validate(&g));
                assert_eq!(&theta.paths[0].vertices()[..3], &[f.a, f.v, f.u][..]);
                let others = theta.paths[1].vertex_set().union(theta.paths[2].vertex_set());
                let targets = others.difference(g.closed_neighbors(theta.b));
                let blocked = g.closed_neighbors(theta.b).union(g.closed_neighbors(f.v));
                assert!(!escapes(&g, f.u, targets, blocked), "bypass of {theta:?}");
            }
        }
    }
    assert!(graphs >= 50 && thetas >= 50, "only {graphs} graphs and {thetas} thetas");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clique_cutset_blocks_are_reduced(n in 6usize..=12, seed in any::<u64>()) {
        let Some(g) = sample(n, GraphClass::VerySparse, seed) else {
            return Ok(());
        };
        let t = clique_number(&g).max(2);
        let w = WeightFunction::uniform(g.n()).unwrap();
        let report = decompose(&g, t, &w, &PipelineOptions::assuming(), &mut Budget::unlimited()).unwrap();
        let mut covered = VertexSet::EMPTY;
        for block in &report.blocks {
            let x: VertexSet = block.vertices.iter().collect();
            covered = covered.union(x);
            let (h, _) = g.induced_subgraph(x);
            match block.outcome {
                BlockOutcome::Complete => prop_assert!(h.is_complete()),
                BlockOutcome::F2(_) => {
                    prop_assert!(common::cliques(&h, 3).iter().all(|c| c.len() < 3));
                    prop_assert!(!common::has_star_cutset(&h));
                }
            }
        }
        prop_assert_eq!(covered, g.vertices());
        prop_assert_eq!(report.treewidth_preserved, Some(true));
    }

    #[test]
    fn central_bag_weights_and_lifts(seed in any::<u64>()) {
        let (g, w, pairs) = common::appendage_instance(&mut ChaCha8Rng::seed_from_u64(seed));
        let Ok(bag) = build_central_bag(&g, &w, &pairs, PiOrder::Lexicographic) else {
            return Ok(());
        };
        prop_assert!(bag.beta.is_subset(g.vertices()));
        prop_assert!(bag.w_beta.support().is_subset(bag.beta));
        prop_assert_eq!(bag.w_beta.total().mass, w.denom());
        prop_assert_eq!(bag.weights_on_beta().unwrap().n(), bag.beta.len());
        for p in &bag.pairs {
            if let Some(m) = &p.marker {
                prop_assert!(m.is_induced_in(&g));
                prop_assert!(m.interior().is_subset(p.a_star));
                prop_assert!(p.pair.k1().contains(m.first()) || p.pair.k2().contains(m.first()));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..8 {
            use rand::Rng;
            let x: VertexSet = bag.beta.iter().filter(|_| rng.random_bool(0.3)).collect();
            let y = bag.lift_separator(x).unwrap();
            prop_assert!(x.intersection(bag.core).is_subset(y));
            prop_assert!(y.len() <= bag.lift_bound(x.len()));
        }
    }
}
