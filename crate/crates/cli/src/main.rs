//! `hollow-tw`: generators, recognizers, cutsets, treewidth and the
//! decomposition pipeline from the command line.
//!
//! Exit status: 0 when every property holds, 1 when one fails (a witness
//! is printed), 2 on errors.

mod commands;
mod generate;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hollow_tw_core::corpus::io::{parse_graphs, Format};
use hollow_tw_core::weights::WeightFunction;
use hollow_tw_core::{Budget, Graph};

#[derive(Parser, Debug)]
#[command(name = "hollow-tw", version, about = "Sparse-graph treewidth toolkit")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Graph format for input and output.
    #[arg(long, global = true, default_value = "graph6", value_parser = parse_format)]
    pub format: Format,
    /// Weight file: one `<vertex> <rational>` per line (default uniform).
    #[arg(long, global = true, value_name = "FILE")]
    pub weights: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node budget for the exponential searches.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: hollow_tw_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph from a named family.
    Gen(generate::GenArgs),
    /// Test a class or freeness property; a witness is printed when it fails.
    Check(commands::CheckArgs),
    /// Find a clique cutset, a star cutset or the active two-clique pairs.
    Cutset(commands::CutsetArgs),
    /// Exact treewidth, optionally with an optimal tree decomposition.
    Tw(commands::TwArgs),
    /// Run the clique-cutset and central-bag decomposition.
    Decompose(commands::DecomposeArgs),
    /// Validate a tree decomposition, or run the separator bridge checks.
    Verify(commands::VerifyArgs),
}

/// Result of running a command on one graph.
pub struct Outcome {
    pub holds: bool,
    pub text: String,
    pub json: serde_json::Value,
}

pub type CliResult<T> = Result<T, String>;

pub fn budget(opts: &GlobalOpts) -> Budget {
    opts.budget.map(Budget::new).unwrap_or_default()
}

pub fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

pub fn read_graphs(path: &Path, format: Format) -> CliResult<Vec<Graph>> {
    let text = read_text(path)?;
    let graphs = parse_graphs(&text, format).map_err(|e| format!("{}: {e}", path.display()))?;
    if graphs.is_empty() {
        return Err(format!("{}: no graph in input", path.display()));
    }
    Ok(graphs)
}

pub fn weights_for(g: &Graph, opts: &GlobalOpts) -> CliResult<WeightFunction> {
    match &opts.weights {
        Some(path) => {
            let text = read_text(path)?;
            WeightFunction::parse(&text, g.n()).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => WeightFunction::uniform(g.n()).map_err(|e| e.to_string()),
    }
}

fn emit(outcomes: &[Outcome], report: ReportFormat) {
    match report {
        ReportFormat::Text => {
            for o in outcomes {
                print!("{}", o.text);
                if !o.text.ends_with('\n') {
                    println!();
                }
            }
        }
        ReportFormat::Json => {
            let value = match outcomes {
                [single] => single.json.clone(),
                many => serde_json::Value::Array(many.iter().map(|o| o.json.clone()).collect()),
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
        }
    }
}

fn run(cli: Cli) -> CliResult<Vec<Outcome>> {
    let g = &cli.global;
    match cli.command {
        Command::Gen(args) => generate::run(&args, g).map(|text| {
            vec![Outcome { holds: true, json: serde_json::Value::String(text.clone()), text }]
        }),
        Command::Check(args) => commands::per_graph(&args.input, g, |graph| commands::check(graph, &args, g)),
        Command::Cutset(args) => commands::per_graph(&args.input, g, |graph| commands::cutset(graph, &args, g)),
        Command::Tw(args) => commands::per_graph(&args.input, g, |graph| commands::tw(graph, &args)),
        Command::Decompose(args) => {
            commands::per_graph(&args.input, g, |graph| commands::decompose(graph, &args, g))
        }
        Command::Verify(args) => commands::per_graph(&args.input, g, |graph| commands::verify(graph, &args, g)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = cli.global.report;
    let is_gen = matches!(cli.command, Command::Gen(_));
    match run(cli) {
        Ok(outcomes) => {
            if is_gen {
                for o in &outcomes {
                    print!("{}", o.text);
                }
            } else {
                emit(&outcomes, report);
            }
            if outcomes.iter().all(|o| o.holds) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("hollow-tw: {message}");
            ExitCode::from(2)
        }
    }
}
