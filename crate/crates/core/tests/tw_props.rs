mod common;

use proptest::prelude::*;

use hollow_tw_core::tw::{
    optimal_elimination_ordering, tree_decomposition, treewidth_exact, treewidth_exact_capped,
    validate_tree_decomposition, TreeDecomposition,
};
use hollow_tw_core::VertexSet;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_treewidth_matches_all_orderings(g in common::graphs(0, 8, 0.4)) {
        prop_assert_eq!(treewidth_exact(&g).unwrap(), common::treewidth(&g));
    }

    #[test]
    fn decomposition_is_valid_and_optimal(g in common::graphs(1, 13, 0.3)) {
        let tw = treewidth_exact(&g).unwrap();
        let td = tree_decomposition(&g).unwrap();
        prop_assert!(validate_tree_decomposition(&g, &td).is_ok());
        prop_assert_eq!(td.width(), tw);
        let order = optimal_elimination_ordering(&g).unwrap();
        prop_assert_eq!(TreeDecomposition::from_elimination_ordering(&g, &order).unwrap().width(), tw);
    }

    #[test]
    fn decomposition_text_round_trips(g in common::graphs(1, 12, 0.3)) {
        let td = tree_decomposition(&g).unwrap();
        let again = TreeDecomposition::parse(&td.to_text()).unwrap();
        prop_assert!(validate_tree_decomposition(&g, &again).is_ok());
        prop_assert_eq!(again.width(), td.width());
    }

    #[test]
    fn induced_subgraphs_never_increase_treewidth(g in common::graphs(1, 12, 0.35), bits in any::<u16>()) {
        let x = VertexSet::from_bits(u128::from(bits)).intersection(g.vertices());
        let (h, _) = g.induced_subgraph(x);
        prop_assert!(treewidth_exact(&h).unwrap() <= treewidth_exact(&g).unwrap());
    }

    #[test]
    fn treewidth_is_bounded_by_simple_invariants(g in common::graphs(1, 12, 0.35)) {
        let tw = treewidth_exact(&g).unwrap();
        let omega = common::cliques(&g, g.n()).iter().map(|c| c.len()).max().unwrap_or(1);
        prop_assert!(omega <= tw + 1);
        prop_assert!(tw <= g.n() - 1);
        if g.m() == 0 {
            prop_assert_eq!(tw, 0);
        }
    }

    #[test]
    fn vertex_cap_is_enforced(g in common::graphs(1, 11, 0.35), cap in 0usize..14) {
        let capped = treewidth_exact_capped(&g, cap);
        if g.n() <= cap {
            prop_assert_eq!(capped.unwrap(), treewidth_exact(&g).unwrap());
        } else {
            prop_assert!(capped.is_err());
        }
    }
}
