//! Separations and cutsets.

pub mod separation;
pub mod two_clique;

pub use separation::{find_clique_cutset, find_star_cutset, separates, star_to_cliques, Separation};
pub use two_clique::{
    active_pairs, canonical_separation, clique_pool, is_active, is_active_among, is_proper, loosely_noncrossing,
    noncrossing, proper_separations, CanonicalSeparation, CliquePair,
};
