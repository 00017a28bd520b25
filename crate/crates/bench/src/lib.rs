//! Fixture builders shared by the benchmarks.

use hollow_tw_core::corpus::generators::{gnp, linked_holes, petersen, wall};
use hollow_tw_core::weights::WeightFunction;
use hollow_tw_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named graphs small enough for the exact treewidth oracle.
pub fn oracle_fixtures() -> Vec<(&'static str, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    vec![
        ("petersen", petersen()),
        ("wall3", wall(3).expect("k >= 2")),
        ("gnp14", gnp(14, 0.3, &mut rng)),
        ("gnp16", gnp(16, 0.25, &mut rng)),
    ]
}

/// A triangle-free sparse instance with one heavy seagull.
pub fn linked_holes_fixture() -> Graph {
    linked_holes(6, 8, 3, 4, 2, 3).expect("valid parameters")
}

pub fn random_weights(n: usize, seed: u64) -> WeightFunction {
    WeightFunction::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).expect("n >= 1")
}
