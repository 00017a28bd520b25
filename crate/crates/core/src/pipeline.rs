//! End-to-end decomposition: clique-cutset blocks, then heavy-seagull
//! breaking and a central bag on each triangle-free block.

use serde::Serialize;

use crate::budget::Budget;
use crate::central_bag::{build_central_bag, CentralBag, PiOrder};
use crate::cutsets::{clique_pool, find_clique_cutset, find_star_cutset, star_to_cliques, CliquePair};
use crate::error::{Error, Result};
use crate::graph::{clique_number_at_most, Graph};
use crate::recognizers::{class_membership, heavy_seagulls, ClassMembership, Seagull};
use crate::seagull::{
    breaking_pair_with_index, check_in_f2, check_no_star_cutset, check_unbalanced, violated, BreakingMethod,
    BreakingPair, HypothesisPolicy, PairIndex,
};
use crate::tw::{treewidth_exact_capped, DEFAULT_CAP};
use crate::vset::VertexSet;
use crate::weights::WeightFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineOptions {
    pub policy: HypothesisPolicy,
    /// Skip only the unbalancedness check under [`HypothesisPolicy::Require`].
    pub assume_unbalanced: bool,
    /// `d` in the `d`-unbalanced check.
    pub unbalance_order: usize,
    /// Largest clique admitted to the pair pool.
    pub clique_bound: usize,
    /// Largest graph handed to the exact treewidth oracle.
    pub oracle_cap: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            policy: HypothesisPolicy::Require,
            assume_unbalanced: false,
            unbalance_order: 4,
            clique_bound: 2,
            oracle_cap: DEFAULT_CAP,
        }
    }
}

impl PipelineOptions {
    pub fn assuming() -> Self {
        PipelineOptions { policy: HypothesisPolicy::Assume, ..Self::default() }
    }

    /// How the guarantees in a report rest on the hypotheses.
    pub fn tag(&self) -> &'static str {
        match (self.policy, self.assume_unbalanced) {
            (HypothesisPolicy::Require, true) => "hypotheses verified except unbalancedness (assumed)",
            (policy, _) => policy.tag(),
        }
    }
}

/// Outcome of each hypothesis check; `None` when it was not run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypothesisChecks {
    pub tag: String,
    pub in_f2: Option<bool>,
    pub star_cutset_free: Option<bool>,
    pub unbalanced: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeagullOutcome {
    pub seagull: Seagull,
    pub pair: CliquePair,
    pub method: BreakingMethod,
    pub theta_ends: Option<(usize, usize)>,
    /// Active with `A ∩ {a, u1} ≠ ∅`.
    pub postcondition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Checks {
    pub no_heavy_seagull_in_beta: bool,
    /// `|δ(v)| ≤ 2` for every `v ∈ β`.
    pub delta_at_most_two: bool,
    /// `tw(G) ≤ 8 (tw(β) + 1)`, when both are within the oracle cap.
    pub treewidth_bound: Option<bool>,
}

impl F2Checks {
    pub fn all_pass(&self) -> bool {
        self.no_heavy_seagull_in_beta && self.delta_at_most_two && self.treewidth_bound != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Report {
    pub n: usize,
    pub hypotheses: HypothesisChecks,
    pub heavy_seagulls: Vec<Seagull>,
    pub breaking: Vec<SeagullOutcome>,
    pub bag: CentralBag,
    pub beta_heavy_seagulls: Vec<Seagull>,
    pub checks: F2Checks,
    pub treewidth: Option<usize>,
    pub treewidth_beta: Option<usize>,
}

fn maybe_tw(g: &Graph, cap: usize) -> Result<Option<usize>> {
    if g.n() > cap {
        return Ok(None);
    }
    treewidth_exact_capped(g, cap).map(Some)
}

fn map_bag_error(e: Error) -> Error {
    match e {
        Error::CrossingPairs(p, q) => violated("central-bag", format!("breaking pairs {p} and {q} are loosely non-crossing")),
        Error::NoMarkerPath(p) => violated("central-bag", format!("{p} has a marker path through its A-side")),
        Error::UnassignedComponent(d) => violated("central-bag", format!("component {d:?} lies in a single A-side")),
        Error::NotUnbalanced { pair, reason } => {
            violated("central-bag", format!("the canonical separation of {pair} is defined ({reason})"))
        }
        other => other,
    }
}

/// Breaks every heavy seagull of a connected `G ∈ F_2` and builds the
/// central bag of the breaking pairs.
///
/// Under [`HypothesisPolicy::Require`] the class and star-cutset
/// hypotheses are checked up front, and `d`-unbalancedness when there is a
/// heavy seagull to break. The report records whether `β` is free of heavy
/// seagulls, whether `|δ(v)| ≤ 2` on `β`, and the treewidths of `G` and `β`
/// when the oracle applies.
pub fn decompose_f2(g: &Graph, w: &WeightFunction, opts: &PipelineOptions, budget: &mut Budget) -> Result<F2Report> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let heavy = heavy_seagulls(g);
    let mut hypotheses = HypothesisChecks { tag: opts.tag().to_string(), ..Default::default() };
    if opts.policy == HypothesisPolicy::Require {
        check_in_f2(g, budget)?;
        hypotheses.in_f2 = Some(true);
        check_no_star_cutset(g)?;
        hypotheses.star_cutset_free = Some(true);
        if !heavy.is_empty() && !opts.assume_unbalanced {
            check_unbalanced(g, w, opts.unbalance_order, budget)?;
            hypotheses.unbalanced = Some(true);
        }
    }

    let mut breaking = Vec::with_capacity(heavy.len());
    let mut family: Vec<CliquePair> = Vec::new();
    if !heavy.is_empty() {
        let index = PairIndex::new(g, w, &clique_pool(g, opts.clique_bound));
        for &f in &heavy {
            let bp: BreakingPair = breaking_pair_with_index(g, w, f, &index, budget)?;
            breaking.push(SeagullOutcome {
                seagull: f,
                pair: bp.pair,
                method: bp.method,
                theta_ends: bp.theta.as_ref().map(|t| (t.a(), t.b)),
                postcondition: bp.satisfies_postcondition(g, &index),
            });
            if !family.contains(&bp.pair) {
                family.push(bp.pair);
            }
        }
    }

    let bag = build_central_bag(g, w, &family, PiOrder::Lexicographic).map_err(map_bag_error)?;
    let (gb, map) = bag.graph(g);
    let beta_heavy: Vec<Seagull> = heavy_seagulls(&gb)
        .into_iter()
        .map(|s| Seagull { a: map[s.a], v: map[s.v], u: map[s.u] })
        .collect();
    let treewidth = maybe_tw(g, opts.oracle_cap)?;
    let treewidth_beta = maybe_tw(&gb, opts.oracle_cap)?;
    let checks = F2Checks {
        no_heavy_seagull_in_beta: beta_heavy.is_empty(),
        delta_at_most_two: bag.delta_beta <= 2,
        treewidth_bound: treewidth.zip(treewidth_beta).map(|(t, tb)| t <= 8 * (tb + 1)),
    };
    Ok(F2Report {
        n: g.n(),
        hypotheses,
        heavy_seagulls: heavy,
        breaking,
        bag,
        beta_heavy_seagulls: beta_heavy,
        checks,
        treewidth,
        treewidth_beta,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Reduction {
    /// `G[block]` is disconnected; its components are handled separately.
    Components { block: VertexSet },
    CliqueCutset { block: VertexSet, cutset: VertexSet },
    /// A star cutset turned into a clique cutset.
    StarCutset { block: VertexSet, center: usize, cutset: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum BlockOutcome {
    Complete,
    /// Report on `G[vertices]`, numbered `0..` in the order of `vertices`.
    F2(Box<F2Report>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    /// Vertices of the block in increasing order.
    pub vertices: Vec<usize>,
    pub outcome: BlockOutcome,
    pub treewidth: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub t: usize,
    pub policy: HypothesisPolicy,
    pub tag: String,
    pub class: Option<ClassMembership>,
    pub reductions: Vec<Reduction>,
    pub blocks: Vec<BlockReport>,
    pub treewidth: Option<usize>,
    /// `tw(G)` equals the largest block treewidth, when all are known.
    pub treewidth_preserved: Option<bool>,
}

impl DecompositionReport {
    /// Every block check and the treewidth comparison passed.
    pub fn all_pass(&self) -> bool {
        self.treewidth_preserved != Some(false)
            && self.blocks.iter().all(|b| match &b.outcome {
                BlockOutcome::Complete => true,
                BlockOutcome::F2(r) => r.checks.all_pass() && r.breaking.iter().all(|s| s.postcondition),
            })
    }
}

struct Decomposer<'a> {
    g: &'a Graph,
    w: &'a WeightFunction,
    opts: &'a PipelineOptions,
    reductions: Vec<Reduction>,
    blocks: Vec<BlockReport>,
}

impl Decomposer<'_> {
    fn run(&mut self, x: VertexSet, budget: &mut Budget) -> Result<()> {
        let (h, map) = self.g.induced_subgraph(x);
        if !h.is_connected() {
            self.reductions.push(Reduction::Components { block: x });
            for d in self.g.components(x) {
                self.run(d, budget)?;
            }
            return Ok(());
        }
        let lift = |s: VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
        if h.is_complete() {
            let treewidth = Some(h.n().saturating_sub(1));
            self.blocks.push(BlockReport { vertices: map, outcome: BlockOutcome::Complete, treewidth });
            return Ok(());
        }
        if let Some(sep) = find_clique_cutset(&h, budget)? {
            let cutset = lift(sep.c);
            self.reductions.push(Reduction::CliqueCutset { block: x, cutset });
            self.run(lift(sep.a.union(sep.c)), budget)?;
            return self.run(lift(sep.b.union(sep.c)), budget);
        }
        if let Some((sep, center)) = find_star_cutset(&h)? {
            let d1 = h.component_of(sep.a, sep.a.min().expect("proper separation"));
            let d2 = h.component_of(sep.b, sep.b.min().expect("proper separation"));
            let cliques = star_to_cliques(&h, &sep, &[center], d1, d2).map_err(|e| {
                violated("star-cutset", format!("a star cutset centred at {} yields a clique cutset ({e})", map[center]))
            })?;
            let k = cliques[0];
            let rest = h.vertices().difference(k);
            let a = h.component_of(rest, d1.min().expect("nonempty"));
            self.reductions.push(Reduction::StarCutset { block: x, center: map[center], cutset: lift(k) });
            self.run(lift(a.union(k)), budget)?;
            return self.run(lift(rest.difference(a).union(k)), budget);
        }
        if !clique_number_at_most(&h, 2) {
            return Err(violated(
                "trichotomy",
                "a very sparse graph without clique or star cutsets is complete or triangle-free",
            ));
        }
        let w = self.w.restricted(x)?;
        let report = decompose_f2(&h, &w, self.opts, budget)?;
        let treewidth = report.treewidth;
        self.blocks.push(BlockReport { vertices: map, outcome: BlockOutcome::F2(Box::new(report)), treewidth });
        Ok(())
    }
}

/// Splits `G ∈ F_t` along clique cutsets (star cutsets are first turned
/// into clique cutsets) until every block is complete or triangle-free
/// without star cutsets, and runs [`decompose_f2`] on the latter. Block
/// weights are `w` restricted to the block and renormalised.
pub fn decompose(
    g: &Graph,
    t: usize,
    w: &WeightFunction,
    opts: &PipelineOptions,
    budget: &mut Budget,
) -> Result<DecompositionReport> {
    if w.n() != g.n() {
        return Err(Error::InvalidWeights(format!("{} weights for {} vertices", w.n(), g.n())));
    }
    let class = if opts.policy == HypothesisPolicy::Require {
        let m = class_membership(g, t, budget)?;
        if !m.in_f_t {
            return Err(violated("class", format!("G is very sparse with no clique on {} vertices", t + 1)));
        }
        Some(m)
    } else {
        None
    };
    let mut d = Decomposer { g, w, opts, reductions: Vec::new(), blocks: Vec::new() };
    d.run(g.vertices(), budget)?;
    let treewidth = maybe_tw(g, opts.oracle_cap)?;
    let block_max = d.blocks.iter().map(|b| b.treewidth).try_fold(0, |acc, t| t.map(|t| acc.max(t)));
    let treewidth_preserved = treewidth.zip(block_max).map(|(a, b)| a == b);
    Ok(DecompositionReport {
        n: g.n(),
        t,
        policy: opts.policy,
        tag: opts.tag().to_string(),
        class,
        reductions: d.reductions,
        blocks: d.blocks,
        treewidth,
        treewidth_preserved,
    })
}
