//! Random members of the sparse classes by rejection sampling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::corpus::generators::{gnp, random_tree};
use crate::error::Result;
use crate::graph::Graph;
use crate::recognizers::classes::GraphClass;

/// A random tree on `n` vertices with `chords` extra random edges.
fn tree_with_chords<R: Rng>(n: usize, chords: usize, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    let mut missing: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !tree.has_edge(u, v)).collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(chords));
    Graph::from_edges(n, edges).expect("tree plus chords is simple")
}

/// The `i`-th candidate: even draws are `G(n, p)` with an expected degree
/// falling from 3.5 towards 1, odd draws are random trees with a number
/// of chords falling from `n / 2` to 0.
fn draw<R: Rng>(n: usize, i: usize, attempts: usize, rng: &mut R) -> Graph {
    let progress = i as f64 / attempts.max(1) as f64;
    if i.is_multiple_of(2) || n < 3 {
        let degree = 3.5 - 2.5 * progress;
        gnp(n, (degree / (n.max(2) - 1) as f64).min(1.0), rng)
    } else {
        let most = n / 2;
        let chords = rng.random_range(0..=most - (most as f64 * progress) as usize);
        tree_with_chords(n, chords, rng)
    }
}

fn sample(
    n: usize,
    class: GraphClass,
    seed: u64,
    attempts: usize,
    connected: bool,
    budget: &mut Budget,
) -> Result<Option<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..attempts {
        let g = draw(n, i, attempts, &mut rng);
        if connected && !g.is_connected() {
            continue;
        }
        if class.contains(&g, budget)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// A random graph on `n` vertices in `class`, or `None` once `attempts`
/// candidates have been rejected.
pub fn random_class_sample(
    n: usize,
    class: GraphClass,
    seed: u64,
    attempts: usize,
    budget: &mut Budget,
) -> Result<Option<Graph>> {
    sample(n, class, seed, attempts, false, budget)
}

/// As [`random_class_sample`], rejecting disconnected candidates too.
pub fn random_connected_class_sample(
    n: usize,
    class: GraphClass,
    seed: u64,
    attempts: usize,
    budget: &mut Budget,
) -> Result<Option<Graph>> {
    sample(n, class, seed, attempts, true, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_number_at_most;

    #[test]
    fn zero_attempts() {
        assert_eq!(random_class_sample(7, GraphClass::F2, 1, 0, &mut Budget::default()).unwrap(), None);
    }

    #[test]
    fn samples_are_members() {
        let mut b = Budget::unlimited();
        for seed in 0..30 {
            for class in [GraphClass::Sparse, GraphClass::VerySparse, GraphClass::F2] {
                let g = random_class_sample(7, class, seed, 50, &mut b).unwrap().expect("found within 50");
                assert_eq!(g.n(), 7);
                assert!(class.contains(&g, &mut b).unwrap());
                if class == GraphClass::F2 {
                    assert!(clique_number_at_most(&g, 2));
                }
            }
            let g = random_connected_class_sample(12, GraphClass::F2, seed, 200, &mut b).unwrap().unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let mut b = Budget::unlimited();
        let a = random_class_sample(10, GraphClass::Sparse, 5, 40, &mut b).unwrap();
        let c = random_class_sample(10, GraphClass::Sparse, 5, 40, &mut b).unwrap();
        assert_eq!(a, c);
    }
}
