use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hollow_tw_core::corpus::generators as gens;
use hollow_tw_core::corpus::io::{emit_graph, Format};
use hollow_tw_core::corpus::iso::{all_graphs, connected_graphs};
use hollow_tw_core::corpus::sample::random_connected_class_sample;
use hollow_tw_core::recognizers::GraphClass;
use hollow_tw_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{budget, read_graphs, CliResult, GlobalOpts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// K
    Wall,
    /// K [LENGTH per wall edge...]; random lengths up to --max-length without them
    WallSubdivision,
    /// line graph of the graph read from --input
    LineGraph,
    /// L1 L2 L3
    Theta,
    /// L1 L2 L3
    Prism,
    /// L1 L2 L3
    Pyramid,
    /// ROWS COLS SPACING
    LayeredGrid,
    /// H1 H2 D1 D2 C1 C2
    LinkedHoles,
    /// N
    Complete,
    /// A B
    CompleteBipartite,
    /// N
    Cycle,
    /// N
    Path,
    /// N (leaves)
    Star,
    Petersen,
    /// N
    RandomTree,
    /// N P
    Gnp,
    /// N CLASS (sparse, very-sparse or f2), connected, by rejection
    Sample,
    /// N: every graph on N vertices up to isomorphism
    All,
    /// N: every connected graph on N vertices up to isomorphism
    Connected,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Family parameters.
    pub params: Vec<String>,
    /// Longest subdivided edge for random wall subdivisions.
    #[arg(long, default_value_t = 3)]
    pub max_length: usize,
    /// Rejection attempts for `sample`.
    #[arg(long, default_value_t = 1000)]
    pub attempts: usize,
    /// Source graph for `line-graph`.
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
}

fn numbers(params: &[String], count: usize, usage: &str) -> CliResult<Vec<usize>> {
    if params.len() != count {
        return Err(format!("expected {usage}, got {} parameters", params.len()));
    }
    params.iter().map(|p| p.parse().map_err(|_| format!("`{p}` is not a non-negative integer"))).collect()
}

fn core_err(e: hollow_tw_core::Error) -> String {
    e.to_string()
}

/// The generated graphs, emitted in the requested format.
pub fn run(args: &GenArgs, opts: &GlobalOpts) -> CliResult<String> {
    let graphs = graphs(args, opts)?;
    if opts.format == Format::Edgelist && graphs.len() != 1 {
        return Err(format!("the edgelist format holds one graph, {} were generated", graphs.len()));
    }
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&emit_graph(g, opts.format));
        if opts.format == Format::Graph6 {
            out.push('\n');
        }
    }
    Ok(out)
}

fn graphs(args: &GenArgs, opts: &GlobalOpts) -> CliResult<Vec<Graph>> {
    let p = &args.params;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let one = |g: hollow_tw_core::Result<Graph>| g.map(|g| vec![g]).map_err(core_err);
    match args.family {
        Family::Wall => one(gens::wall(numbers(p, 1, "K")?[0])),
        Family::WallSubdivision => {
            let Some((k, lengths)) = p.split_first() else {
                return Err("expected K [LENGTHS...]".into());
            };
            let k = numbers(std::slice::from_ref(k), 1, "K")?[0];
            if lengths.is_empty() {
                one(gens::random_wall_subdivision(k, args.max_length, &mut rng))
            } else {
                let lengths = numbers(lengths, lengths.len(), "LENGTHS")?;
                one(gens::wall_subdivision(k, &lengths))
            }
        }
        Family::LineGraph => {
            numbers(p, 0, "no parameters")?;
            read_graphs(&args.input, opts.format)?.iter().map(|g| gens::line_graph(g).map_err(core_err)).collect()
        }
        Family::Theta | Family::Prism | Family::Pyramid => {
            let l = numbers(p, 3, "L1 L2 L3")?;
            let f = match args.family {
                Family::Theta => gens::theta,
                Family::Prism => gens::prism,
                _ => gens::pyramid,
            };
            one(f(l[0], l[1], l[2]))
        }
        Family::LayeredGrid => {
            let l = numbers(p, 3, "ROWS COLS SPACING")?;
            one(gens::layered_grid(l[0], l[1], l[2]))
        }
        Family::LinkedHoles => {
            let l = numbers(p, 6, "H1 H2 D1 D2 C1 C2")?;
            one(gens::linked_holes(l[0], l[1], l[2], l[3], l[4], l[5]))
        }
        Family::Complete => Ok(vec![gens::complete(bounded(numbers(p, 1, "N")?[0])?)]),
        Family::CompleteBipartite => {
            let l = numbers(p, 2, "A B")?;
            bounded(l[0] + l[1])?;
            Ok(vec![gens::complete_bipartite(l[0], l[1])])
        }
        Family::Cycle => {
            let n = bounded(numbers(p, 1, "N")?[0])?;
            if n < 3 {
                return Err("a cycle needs at least 3 vertices".into());
            }
            Ok(vec![gens::cycle(n)])
        }
        Family::Path => Ok(vec![gens::path_graph(bounded(numbers(p, 1, "N")?[0])?)]),
        Family::Star => Ok(vec![gens::star(bounded(numbers(p, 1, "N")?[0] + 1)? - 1)]),
        Family::Petersen => {
            numbers(p, 0, "no parameters")?;
            Ok(vec![gens::petersen()])
        }
        Family::RandomTree => Ok(vec![gens::random_tree(bounded(numbers(p, 1, "N")?[0])?, &mut rng)]),
        Family::Gnp => {
            let [n, prob] = p.as_slice() else {
                return Err(format!("expected N P, got {} parameters", p.len()));
            };
            let n = bounded(numbers(std::slice::from_ref(n), 1, "N")?[0])?;
            let prob: f64 = prob.parse().map_err(|_| format!("`{prob}` is not a probability"))?;
            if !(0.0..=1.0).contains(&prob) {
                return Err(format!("probability {prob} is outside [0, 1]"));
            }
            Ok(vec![gens::gnp(n, prob, &mut rng)])
        }
        Family::Sample => {
            let [n, class] = p.as_slice() else {
                return Err(format!("expected N CLASS, got {} parameters", p.len()));
            };
            let n = bounded(numbers(std::slice::from_ref(n), 1, "N")?[0])?;
            let class = GraphClass::parse(class).ok_or_else(|| format!("unknown class `{class}`"))?;
            let mut b = budget(opts);
            random_connected_class_sample(n, class, opts.seed, args.attempts, &mut b)
                .map_err(core_err)?
                .map(|g| vec![g])
                .ok_or_else(|| format!("no {class} graph on {n} vertices within {} attempts", args.attempts))
        }
        Family::All => all_graphs(numbers(p, 1, "N")?[0]).map_err(core_err),
        Family::Connected => connected_graphs(numbers(p, 1, "N")?[0]).map_err(core_err),
    }
}

fn bounded(n: usize) -> CliResult<usize> {
    if n > hollow_tw_core::vset::MAX_VERTICES {
        return Err(format!("{n} vertices exceed the maximum of {}", hollow_tw_core::vset::MAX_VERTICES));
    }
    Ok(n)
}
