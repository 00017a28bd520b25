use std::path::PathBuf;

use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use hollow_tw_core::balance::{check_bs_to_tw_tight, check_tw_to_separator, min_balanced_separator};
use hollow_tw_core::cutsets::{active_pairs, canonical_separation, find_clique_cutset, find_star_cutset, star_to_cliques};
use hollow_tw_core::graph::enumerate_cliques;
use hollow_tw_core::pipeline::{decompose as run_decompose, BlockOutcome, PipelineOptions};
use hollow_tw_core::recognizers::{find_configuration, sparse_violation, ConfigurationKind};
use hollow_tw_core::tw::{
    tree_decomposition, treewidth_exact_capped, validate_tree_decomposition, TreeDecomposition, DEFAULT_CAP,
};
use hollow_tw_core::weights::{half, WeightFunction};
use hollow_tw_core::{Graph, VertexSet};

use crate::{budget, read_graphs, read_text, weights_for, CliResult, GlobalOpts, Outcome};

fn err(e: hollow_tw_core::Error) -> String {
    e.to_string()
}

/// Runs `f` on every graph of the input, prefixing text output with the
/// graph index when there are several.
pub fn per_graph(
    input: &std::path::Path,
    opts: &GlobalOpts,
    mut f: impl FnMut(&Graph) -> CliResult<Outcome>,
) -> CliResult<Vec<Outcome>> {
    let graphs = read_graphs(input, opts.format)?;
    let many = graphs.len() > 1;
    graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut o = f(g).map_err(|e| if many { format!("graph {i}: {e}") } else { e })?;
            if many {
                o.text = format!("# graph {i}\n{}", o.text);
            }
            Ok(o)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Sparse,
    VerySparse,
    /// Very sparse with clique number at most --class-bound.
    Ft,
    F2,
    DiamondFree,
    ThetaFree,
    PyramidFree,
    PrismFree,
    T1WheelFree,
    T2WheelFree,
    WheelFree,
    /// No (w, 1/2)-balanced separator with at most --order vertices.
    Unbalanced,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub property: Property,
    #[arg(default_value = "-")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub class_bound: usize,
    /// Separator size bound for `unbalanced`.
    #[arg(long, default_value_t = 4)]
    pub order: usize,
}

fn config_kind(p: Property) -> Option<ConfigurationKind> {
    Some(match p {
        Property::DiamondFree => ConfigurationKind::Diamond,
        Property::ThetaFree => ConfigurationKind::Theta,
        Property::PyramidFree => ConfigurationKind::Pyramid,
        Property::PrismFree => ConfigurationKind::Prism,
        Property::T1WheelFree => ConfigurationKind::T1Wheel,
        Property::T2WheelFree => ConfigurationKind::T2Wheel,
        Property::WheelFree => ConfigurationKind::Wheel,
        _ => return None,
    })
}

fn property_name(p: Property) -> String {
    p.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn verdict(name: &str, holds: bool, witness_text: Option<String>, witness: serde_json::Value) -> Outcome {
    let mut text = format!("{name}: {holds}\n");
    if let Some(w) = witness_text {
        text.push_str(&format!("witness: {w}\n"));
    }
    Outcome { holds, text, json: json!({ "property": name, "holds": holds, "witness": witness }) }
}

/// Witness that `G` is not very sparse, or `None` when it is.
fn very_sparse_witness(g: &Graph, b: &mut hollow_tw_core::Budget) -> CliResult<Option<(String, serde_json::Value)>> {
    if let Some((hole, v)) = sparse_violation(g, b).map_err(err)? {
        let text = format!("vertex {v} has non-adjacent neighbours in hole {:?}", hole.vertices());
        return Ok(Some((text, json!({ "kind": "sparse-violation", "hole": hole, "vertex": v }))));
    }
    for kind in [ConfigurationKind::Pyramid, ConfigurationKind::Prism] {
        if let Some(w) = find_configuration(g, kind, b).map_err(err)? {
            return Ok(Some((format!("{kind} on {}", w.vertices), serde_json::to_value(&w).expect("serializable"))));
        }
    }
    Ok(None)
}

pub fn check(g: &Graph, args: &CheckArgs, opts: &GlobalOpts) -> CliResult<Outcome> {
    let mut b = budget(opts);
    let name = property_name(args.property);
    if let Some(kind) = config_kind(args.property) {
        let found = find_configuration(g, kind, &mut b).map_err(err)?;
        return Ok(match found {
            None => verdict(&name, true, None, json!(null)),
            Some(w) => {
                debug_assert!(w.validate(g));
                let text = format!("{kind} on {}", w.vertices);
                verdict(&name, false, Some(text), serde_json::to_value(&w).expect("serializable"))
            }
        });
    }
    let witness = match args.property {
        Property::Sparse => sparse_violation(g, &mut b).map_err(err)?.map(|(hole, v)| {
            let text = format!("vertex {v} has non-adjacent neighbours in hole {:?}", hole.vertices());
            (text, json!({ "kind": "sparse-violation", "hole": hole, "vertex": v }))
        }),
        Property::VerySparse => very_sparse_witness(g, &mut b)?,
        Property::Ft | Property::F2 => {
            let t = if args.property == Property::F2 { 2 } else { args.class_bound };
            match very_sparse_witness(g, &mut b)? {
                Some(w) => Some(w),
                None => enumerate_cliques(g, t + 1).into_iter().find(|k| k.len() == t + 1).map(|k| {
                    (format!("clique {k} on {} vertices", t + 1), json!({ "kind": "clique", "vertices": k }))
                }),
            }
        }
        Property::Unbalanced => {
            let w = weights_for(g, opts)?;
            min_balanced_separator(g, &w, half(), args.order, &mut b).map_err(err)?.map(|r| {
                let text = format!(
                    "{} is (w,1/2)-balanced, heaviest component {}",
                    r.separator, r.max_component_weight
                );
                (text, serde_json::to_value(r).expect("serializable"))
            })
        }
        _ => unreachable!("configuration properties handled above"),
    };
    Ok(match witness {
        None => verdict(&name, true, None, json!(null)),
        Some((text, value)) => verdict(&name, false, Some(text), value),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CutsetKind {
    Clique,
    Star,
    /// A star cutset turned into clique cutsets.
    StarToClique,
    /// Active two-clique pairs for the weights.
    Active,
}

#[derive(Args, Debug)]
pub struct CutsetArgs {
    #[arg(value_enum)]
    pub kind: CutsetKind,
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Largest clique in an active pair.
    #[arg(long, default_value_t = 2)]
    pub clique_size: usize,
}

fn separation_text(a: VertexSet, c: VertexSet, b: VertexSet) -> String {
    format!("A = {a}\nC = {c}\nB = {b}\n")
}

pub fn cutset(g: &Graph, args: &CutsetArgs, opts: &GlobalOpts) -> CliResult<Outcome> {
    let mut b = budget(opts);
    let none = |what: &str| Outcome {
        holds: false,
        text: format!("no {what}\n"),
        json: json!({ "kind": what, "found": false }),
    };
    match args.kind {
        CutsetKind::Clique => Ok(match find_clique_cutset(g, &mut b).map_err(err)? {
            None => none("clique cutset"),
            Some(s) => Outcome {
                holds: true,
                text: format!("clique cutset\n{}", separation_text(s.a, s.c, s.b)),
                json: json!({ "kind": "clique cutset", "found": true, "separation": s }),
            },
        }),
        CutsetKind::Star | CutsetKind::StarToClique => {
            let Some((s, center)) = find_star_cutset(g).map_err(err)? else {
                return Ok(none("star cutset"));
            };
            let mut text = format!("star cutset centred at {center}\n{}", separation_text(s.a, s.c, s.b));
            let mut value = json!({ "kind": "star cutset", "found": true, "center": center, "separation": s });
            if args.kind == CutsetKind::StarToClique {
                let d1 = g.component_of(s.a, s.a.min().expect("proper separation"));
                let d2 = g.component_of(s.b, s.b.min().expect("proper separation"));
                let cliques = star_to_cliques(g, &s, &[center], d1, d2).map_err(err)?;
                for k in &cliques {
                    text.push_str(&format!("clique {k}\n"));
                }
                value["cliques"] = json!(cliques);
                value["d1"] = json!(d1);
                value["d2"] = json!(d2);
            }
            Ok(Outcome { holds: true, text, json: value })
        }
        CutsetKind::Active => {
            if !g.is_connected() {
                return Err(err(hollow_tw_core::Error::Disconnected));
            }
            let w = weights_for(g, opts)?;
            let pairs = active_pairs(g, &w, args.clique_size);
            let seps: Vec<_> =
                pairs.iter().map(|&p| canonical_separation(g, &w, p)).collect::<Result<_, _>>().map_err(err)?;
            let mut text = format!("{} active pairs\n", seps.len());
            for s in &seps {
                text.push_str(&format!("{}: A = {}, B = {}\n", s.pair, s.a, s.b));
            }
            Ok(Outcome {
                holds: !seps.is_empty(),
                text,
                json: json!({ "kind": "active pairs", "found": !seps.is_empty(), "separations": seps }),
            })
        }
    }
}

#[derive(Args, Debug)]
pub struct TwArgs {
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Also print an optimal tree decomposition.
    #[arg(long)]
    pub decomposition: bool,
    /// Largest graph the exact oracle accepts.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

pub fn tw(g: &Graph, args: &TwArgs) -> CliResult<Outcome> {
    let t = treewidth_exact_capped(g, args.cap).map_err(err)?;
    let mut text = format!("treewidth {t}\n");
    let mut value = json!({ "n": g.n(), "m": g.m(), "treewidth": t });
    if args.decomposition {
        let td = tree_decomposition(g).map_err(err)?;
        text.push_str(&td.to_text());
        value["decomposition"] = json!(td);
    }
    Ok(Outcome { holds: true, text, json: value })
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// The `t` of the class: very sparse with no clique on `t + 1` vertices.
    #[arg(long, default_value_t = 2)]
    pub class_bound: usize,
    /// Skip the unbalancedness check and treat it as assumed.
    #[arg(long)]
    pub assume_unbalanced: bool,
    /// Skip every hypothesis check.
    #[arg(long)]
    pub assume_all: bool,
}

pub fn decompose(g: &Graph, args: &DecomposeArgs, opts: &GlobalOpts) -> CliResult<Outcome> {
    let w = weights_for(g, opts)?;
    let mut b = budget(opts);
    let mut pipeline = if args.assume_all { PipelineOptions::assuming() } else { PipelineOptions::default() };
    pipeline.assume_unbalanced = args.assume_unbalanced;
    let report = run_decompose(g, args.class_bound, &w, &pipeline, &mut b).map_err(err)?;
    let holds = report.all_pass();
    let mut text = format!("decomposition ({}), t = {}\n", report.tag, report.t);
    text.push_str(&format!("{} reductions, {} blocks\n", report.reductions.len(), report.blocks.len()));
    for block in &report.blocks {
        let tw = block.treewidth.map_or("?".to_string(), |t| t.to_string());
        match &block.outcome {
            BlockOutcome::Complete => {
                text.push_str(&format!("  complete block {:?}, treewidth {tw}\n", block.vertices));
            }
            BlockOutcome::F2(r) => {
                text.push_str(&format!(
                    "  triangle-free block {:?}: {} heavy seagulls, |beta| = {}, beta heavy-seagull-free {}, delta <= 2 {}, treewidth {tw}\n",
                    block.vertices,
                    r.heavy_seagulls.len(),
                    r.bag.beta.len(),
                    r.checks.no_heavy_seagull_in_beta,
                    r.checks.delta_at_most_two,
                ));
            }
        }
    }
    if let Some(t) = report.treewidth {
        let preserved = report.treewidth_preserved.map_or("unknown".to_string(), |p| p.to_string());
        text.push_str(&format!("treewidth {t}, equal to the largest block treewidth: {preserved}\n"));
    }
    text.push_str(&format!("all checks pass: {holds}\n"));
    Ok(Outcome { holds, text, json: serde_json::to_value(&report).expect("serializable") })
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Tree decomposition to validate: `i: v1 v2 ...` bag lines, then `a b` tree edges.
    #[arg(long, value_name = "FILE")]
    pub td: Option<PathBuf>,
    /// Random weight functions for the bridge checks.
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
}

pub fn verify(g: &Graph, args: &VerifyArgs, opts: &GlobalOpts) -> CliResult<Outcome> {
    if let Some(path) = &args.td {
        let td = TreeDecomposition::parse(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(match validate_tree_decomposition(g, &td) {
            Ok(()) => Outcome {
                holds: true,
                text: format!("valid tree decomposition of width {}\n", td.width()),
                json: json!({ "valid": true, "width": td.width() }),
            },
            Err(v) => Outcome {
                holds: false,
                text: format!("invalid tree decomposition: {v}\n"),
                json: json!({ "valid": false, "violation": v }),
            },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut weights = Vec::with_capacity(args.samples + 1);
    if opts.weights.is_some() {
        weights.push(weights_for(g, opts)?);
    }
    for _ in 0..args.samples {
        weights.push(WeightFunction::random(g.n(), &mut rng).map_err(err)?);
    }
    let mut failures = Vec::new();
    for (i, w) in weights.iter().enumerate() {
        let r = check_tw_to_separator(g, w, half()).map_err(err)?;
        if !r.holds {
            failures.push(i);
        }
    }
    let bs = check_bs_to_tw_tight(g, half(), args.samples, opts.seed).map_err(err)?;
    let holds = failures.is_empty() && !bs.violation;
    let text = format!(
        "tw-to-separator: {} of {} weight functions fail\nseparator-to-tw: k = {}, treewidth {} <= {}: {}\n",
        failures.len(),
        weights.len(),
        bs.k,
        bs.treewidth,
        bs.bound,
        !bs.violation
    );
    Ok(Outcome {
        holds,
        text,
        json: json!({ "tw_to_separator_failures": failures, "weights": weights.len(), "bs_to_tw": bs }),
    })
}
