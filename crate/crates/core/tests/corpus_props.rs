mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hollow_tw_core::corpus::generators::{gnp, line_graph, random_tree, random_wall_subdivision, theta};
use hollow_tw_core::corpus::iso::{all_graphs, are_isomorphic, canonical_form, connected_graphs};
use hollow_tw_core::corpus::sample::{random_class_sample, random_connected_class_sample};
use hollow_tw_core::recognizers::{class_membership, GraphClass};
use hollow_tw_core::tw::treewidth_exact;
use hollow_tw_core::Budget;

#[test]
fn graph_counts_up_to_isomorphism() {
    let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).unwrap().len()).collect();
    assert_eq!(all, [1, 2, 4, 11, 34, 156]);
    let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
    assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let graphs = all_graphs(5).unwrap();
    for (i, g) in graphs.iter().enumerate() {
        assert_eq!(&canonical_form(g), g);
        for h in &graphs[i + 1..] {
            assert!(!are_isomorphic(g, h));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn samples_belong_to_their_class(n in 4usize..=11, seed in any::<u64>(), class in prop::sample::select(vec![GraphClass::Sparse, GraphClass::VerySparse, GraphClass::F2])) {
        let mut b = Budget::unlimited();
        if let Some(g) = random_connected_class_sample(n, class, seed, 200, &mut b).unwrap() {
            prop_assert_eq!(g.n(), n);
            prop_assert!(g.is_connected());
            prop_assert!(class.admits(&class_membership(&g, 2, &mut b).unwrap()));
        }
        let again = random_class_sample(n, class, seed, 200, &mut b).unwrap();
        prop_assert_eq!(again.clone(), random_class_sample(n, class, seed, 200, &mut b).unwrap());
        if let Some(g) = again {
            prop_assert!(class.contains(&g, &mut b).unwrap());
        }
    }

    #[test]
    fn trees_have_treewidth_one(n in 2usize..=14, seed in any::<u64>()) {
        let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(t.m(), n - 1);
        prop_assert!(t.is_connected());
        prop_assert_eq!(treewidth_exact(&t).unwrap(), 1);
        prop_assert!(common::sparse(&t));
    }

    #[test]
    fn line_graph_sizes(g in common::graphs(1, 10, 0.3)) {
        let l = line_graph(&g).unwrap();
        prop_assert_eq!(l.n(), g.m());
        let expected: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.m(), expected);
    }

    #[test]
    fn long_thetas_are_triangle_free_and_very_sparse(l in prop::array::uniform3(3usize..=6)) {
        let g = theta(l[0], l[1], l[2]).unwrap();
        let m = class_membership(&g, 2, &mut Budget::unlimited()).unwrap();
        prop_assert!(m.in_f_2);
        prop_assert_eq!(g.n(), l.iter().sum::<usize>() - 1);
    }

    #[test]
    fn wall_subdivisions_stay_triangle_free(seed in any::<u64>()) {
        let g = random_wall_subdivision(2, 2, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(g.is_connected());
        prop_assert!(common::cliques(&g, 3).iter().all(|c| c.len() < 3));
    }

    #[test]
    fn gnp_is_seeded(n in 0usize..=20, seed in any::<u64>()) {
        let a = gnp(n, 0.4, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = gnp(n, 0.4, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(a, b);
    }
}
