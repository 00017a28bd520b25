//! Balanced separators and the two treewidth–separator bridges.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tw::treewidth_exact;
use crate::vset::VertexSet;
use crate::weights::{half, Fraction, Weight, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedSeparatorResult {
    pub separator: VertexSet,
    /// Weight of the heaviest component of `G ∖ separator` (0 if none).
    pub max_component_weight: Weight,
}

fn check_c(c: Fraction) -> Result<()> {
    if c < half() || c >= Fraction::from_integer(1) {
        return Err(Error::InvalidParameters(format!("balance constant {c} is not in [1/2, 1)")));
    }
    Ok(())
}

/// Largest integer mass a component may carry: `floor(c · denom)`.
fn mass_limit(w: &WeightFunction, c: Fraction) -> Result<u128> {
    let scaled = w.denom().checked_mul(u128::from(*c.numer())).ok_or(Error::WeightOverflow)?;
    Ok(scaled / u128::from(*c.denom()))
}

/// Weight of the heaviest component of `G ∖ x`.
pub fn max_component_weight(g: &Graph, w: &WeightFunction, x: VertexSet) -> Weight {
    let mass = g
        .components(g.vertices().difference(x))
        .into_iter()
        .map(|d| w.mass_of(d))
        .max()
        .unwrap_or(0);
    Weight { mass, denom: w.denom() }
}

/// Every component of `G ∖ x` has weight at most `c`.
pub fn is_balanced_separator(g: &Graph, w: &WeightFunction, x: VertexSet, c: Fraction) -> Result<bool> {
    check_c(c)?;
    Ok(max_component_weight(g, w, x).mass <= mass_limit(w, c)?)
}

fn balanced_with_limit(g: &Graph, w: &WeightFunction, x: VertexSet, limit: u128) -> bool {
    let mut rest = g.vertices().difference(x);
    while let Some(v) = rest.min() {
        let d = g.component_of(rest, v);
        if w.mass_of(d) > limit {
            return false;
        }
        rest = rest.difference(d);
    }
    true
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Number of subsets of size at most `cap` of an `n`-set.
pub fn candidate_count(n: usize, cap: usize) -> u128 {
    (0..=cap.min(n)).fold(0u128, |acc, s| acc.saturating_add(binomial(n, s)))
}

/// Visits the `s`-subsets of `0..n` in lexicographic order until `f`
/// returns true.
fn first_subset(n: usize, s: usize, mut f: impl FnMut(VertexSet) -> Result<bool>) -> Result<Option<VertexSet>> {
    if s > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        let set: VertexSet = idx.iter().collect();
        if f(set)? {
            return Ok(Some(set));
        }
        // advance to the next combination
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if idx[i] < n - s + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A smallest `(w, c)`-balanced separator with at most `size_cap` vertices,
/// lexicographically first among those of that size.
///
/// Fails with [`Error::SearchTooLarge`] before searching when the number of
/// candidate subsets exceeds what is left of `budget`.
pub fn min_balanced_separator(
    g: &Graph,
    w: &WeightFunction,
    c: Fraction,
    size_cap: usize,
    budget: &mut Budget,
) -> Result<Option<BalancedSeparatorResult>> {
    check_c(c)?;
    if w.n() != g.n() {
        return Err(Error::InvalidWeights(format!("{} weights for {} vertices", w.n(), g.n())));
    }
    let candidates = candidate_count(g.n(), size_cap);
    if candidates > u128::from(budget.remaining()) {
        return Err(Error::SearchTooLarge { candidates, budget: budget.remaining() });
    }
    let limit = mass_limit(w, c)?;
    for s in 0..=size_cap.min(g.n()) {
        let found = first_subset(g.n(), s, |x| {
            budget.tick()?;
            Ok(balanced_with_limit(g, w, x, limit))
        })?;
        if let Some(separator) = found {
            return Ok(Some(BalancedSeparatorResult {
                separator,
                max_component_weight: max_component_weight(g, w, separator),
            }));
        }
    }
    Ok(None)
}

/// `(G, w)` has no `(w, 1/2)`-balanced separator of size at most `d`.
pub fn is_unbalanced(g: &Graph, w: &WeightFunction, d: usize, budget: &mut Budget) -> Result<bool> {
    Ok(min_balanced_separator(g, w, half(), d, budget)?.is_none())
}

/// Size of a smallest `(w, c)`-balanced separator (at most `n`).
pub fn min_balanced_separator_size(g: &Graph, w: &WeightFunction, c: Fraction, budget: &mut Budget) -> Result<usize> {
    Ok(min_balanced_separator(g, w, c, g.n(), budget)?
        .map(|r| r.separator.len())
        .unwrap_or(g.n()))
}

/// Weight functions used to probe the hypothesis of the separator-to-
/// treewidth bridge: every point mass, the uniform weights, then
/// `random_samples` random ones from `seed`.
pub fn weight_samples(n: usize, random_samples: usize, seed: u64) -> Result<Vec<WeightFunction>> {
    let mut out = Vec::with_capacity(n + 1 + random_samples);
    if n == 0 {
        return Ok(out);
    }
    for v in 0..n {
        out.push(WeightFunction::point(n, v)?);
    }
    out.push(WeightFunction::uniform(n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_samples {
        out.push(WeightFunction::random(n, &mut rng)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BsToTwReport {
    pub k: usize,
    pub c: String,
    pub samples: usize,
    /// Subset-uniform weights were added to re-check a suspected violation.
    pub escalated: bool,
    /// Every sampled weight function admits a separator of size at most `k`.
    pub hypothesis_holds: bool,
    /// Largest minimum separator size over the samples.
    pub largest_min_separator: usize,
    pub treewidth: usize,
    /// `k / (1 - c)`.
    pub bound: String,
    /// Hypothesis holds but `tw(G) > k / (1 - c)`.
    pub violation: bool,
}


/// Largest order for which a suspected violation is re-examined against
/// the uniform weights on every vertex subset.
pub const ESCALATION_MAX_N: usize = 12;

/// Largest minimum separator size over `samples`, stopping early once it
/// exceeds `cap`.
fn largest_min_separator<'a>(
    g: &Graph,
    c: Fraction,
    cap: usize,
    samples: impl IntoIterator<Item = &'a WeightFunction>,
) -> Result<usize> {
    let mut largest = 0;
    for w in samples {
        let found = min_balanced_separator(g, w, c, cap, &mut Budget::unlimited())?;
        match found {
            Some(r) => largest = largest.max(r.separator.len()),
            None => return Ok(cap + 1),
        }
    }
    Ok(largest)
}

/// Uniform weights on every vertex subset with at least two vertices.
fn subset_weights(n: usize) -> Result<Vec<WeightFunction>> {
    (1u64..1 << n)
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| WeightFunction::from_masses((0..n).map(|v| u128::from(mask >> v & 1 == 1)).collect()))
        .collect()
}

/// Shared driver: `cap` bounds the separator search, `tight` makes `k` the
/// largest minimum separator size found.
fn bs_to_tw(g: &Graph, k: Option<usize>, c: Fraction, random_samples: usize, seed: u64) -> Result<BsToTwReport> {
    check_c(c)?;
    let tw = treewidth_exact(g)?;
    let mut samples = weight_samples(g.n(), random_samples, seed)?;
    let cap = k.unwrap_or(g.n());
    let mut largest = largest_min_separator(g, c, cap, &samples)?;
    let mut escalated = false;
    let k_of = |largest: usize| k.unwrap_or(largest);
    if largest <= k_of(largest) && !within_bound(tw, k_of(largest), c) && g.n() <= ESCALATION_MAX_N {
        // sampled weights only under-approximate the hypothesis
        let extra = subset_weights(g.n())?;
        largest = largest.max(largest_min_separator(g, c, cap, &extra)?);
        samples.extend(extra);
        escalated = true;
    }
    let k = k_of(largest);
    let hypothesis_holds = largest <= k;
    Ok(BsToTwReport {
        k,
        c: c.to_string(),
        samples: samples.len(),
        escalated,
        hypothesis_holds,
        largest_min_separator: largest,
        treewidth: tw,
        bound: (Fraction::from_integer(k as u64) / (Fraction::from_integer(1) - c)).to_string(),
        violation: hypothesis_holds && !within_bound(tw, k, c),
    })
}

/// `tw ≤ k / (1 - c)`, in integers: `tw · (q - p) ≤ k · q`.
fn within_bound(tw: usize, k: usize, c: Fraction) -> bool {
    let (p, q) = (u128::from(*c.numer()), u128::from(*c.denom()));
    (tw as u128) * (q - p) <= (k as u128) * q
}

/// Samples weight functions (see [`weight_samples`]); if each admits a
/// `(w, c)`-balanced separator of size at most `k`, checks
/// `tw(G) ≤ k / (1 - c)` with the exact oracle. A sampled hypothesis is
/// weaker than the real one, so an apparent violation on at most
/// [`ESCALATION_MAX_N`] vertices is re-checked against the uniform weights
/// on every subset before it is reported.
pub fn check_bs_to_tw(g: &Graph, k: usize, c: Fraction, random_samples: usize, seed: u64) -> Result<BsToTwReport> {
    bs_to_tw(g, Some(k), c, random_samples, seed)
}

/// [`check_bs_to_tw`] with `k` set to the largest minimum separator size
/// over the samples, the smallest `k` for which the hypothesis holds.
pub fn check_bs_to_tw_tight(g: &Graph, c: Fraction, random_samples: usize, seed: u64) -> Result<BsToTwReport> {
    bs_to_tw(g, None, c, random_samples, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwToSeparatorReport {
    pub treewidth: usize,
    pub separator: Option<BalancedSeparatorResult>,
    /// A `(w, c)`-balanced separator of size at most `tw(G) + 1` exists.
    pub holds: bool,
}

/// Computes `k = tw(G)` and searches for a `(w, c)`-balanced separator of
/// size at most `k + 1`.
pub fn check_tw_to_separator(g: &Graph, w: &WeightFunction, c: Fraction) -> Result<TwToSeparatorReport> {
    let treewidth = treewidth_exact(g)?;
    let separator = min_balanced_separator(g, w, c, treewidth + 1, &mut Budget::unlimited())?;
    Ok(TwToSeparatorReport { treewidth, holds: separator.is_some(), separator })
}
