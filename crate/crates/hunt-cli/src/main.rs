//! `hunt` — command-line front end for the hunters-and-rabbit toolkit.

mod errors;
mod output;
mod play;

use clap::{Parser, Subcommand, ValueEnum};
use errors::{read_file, write_file, CliError, CliResult};
use hunt_core::construct::{
    clique_blowup, double_cover, join, loop_clique_product, start_set_gadget,
    start_set_gadget_strategy, three_partition_gadget, three_partition_strategy,
    union_with_clique, union_with_complete_split,
};
use hunt_core::families::{generate, Family};
use hunt_core::format::{read_graph, read_strategy, write_graph};
use hunt_core::poly::{
    bisection_stable_separator, bounds_chain, exact_vertex_bisection, layered_min_cut,
};
use hunt_core::recognize::{recognize, Method};
use hunt_core::solver::DEFAULT_STATE_CAP;
use hunt_core::{Graph, SolverConfig, VertexSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hunt",
    version,
    about = "Solvers, bounds, recognizers and gadget generators for the hunters-and-rabbit game"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of human text.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    #[value(name = "via-bg")]
    ViaBg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Evb,
    Bss,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the hunting number, or decide a fixed hunter budget with --k.
    Solve {
        graph: PathBuf,
        /// Decide this exact budget instead of minimizing.
        #[arg(long)]
        k: Option<usize>,
        /// Require capture within this many rounds.
        #[arg(long)]
        limit: Option<usize>,
        /// Restrict the rabbit's start set (comma-separated vertices).
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
        /// Disable parallel frontier expansion.
        #[arg(long)]
        single_thread: bool,
    },
    /// Run a strategy file against a graph; prints the trace or an escape walk.
    Verify {
        graph: PathBuf,
        strategy: PathBuf,
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
    },
    /// Decide whether one hunter wins, with a forbidden-subgraph witness.
    Recognize {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// Matching and vertex-cover bounds; add --l for the layered min cut.
    Bounds {
        graph: PathBuf,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Write a named family graph (path, cycle, complete, complete-with-loops,
    /// grid, hypercube, spider, h1-h4, random).
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build transformation and hardness-gadget graphs, with layout sidecars.
    Reduce {
        #[command(subcommand)]
        gadget: ReduceCommand,
    },
    /// Exhaustive separator optimum (exact bisection or stable variant).
    Separators {
        graph: PathBuf,
        #[arg(long, value_enum)]
        problem: ProblemArg,
    },
    /// Play the hunters interactively against the shrinking territory.
    Play {
        graph: PathBuf,
        /// Number of hunters at your disposal.
        #[arg(long)]
        k: usize,
        /// Hide the territory for a fair game.
        #[arg(long)]
        blind: bool,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Bipartite double cover (preserves the hunting number).
    DoubleCover { graph: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Product with the loop-clique on p vertices (multiplies h by p).
    LoopClique {
        graph: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Join of two graphs (disjoint union plus all cross edges).
    Join { left: PathBuf, right: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// 3-partition hardness gadget; add --partition for the proof strategy.
    ThreePartition {
        /// Instance numbers, comma separated (e.g. 2,2,2,2,3,3).
        numbers: String,
        /// Groups as 0-based indices, `;`-separated (e.g. "0,1,4;2,3,5").
        #[arg(long)]
        partition: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Start-set gadget; add --inner to wrap a start-restricted strategy.
    StartSet {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
        /// Strategy file for the start-restricted game, budget at most k.
        #[arg(long)]
        inner: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Disjoint union with a k-clique (two-round vs three-round equivalence).
    WithClique {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Disjoint union with the complete split block (shifts round limits by 2).
    WithSplit {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Clique blowup (relates exact bisection to the stable separator).
    Blowup {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let err = CliError::usage(e.to_string());
            eprintln!("{}", err.stderr_line());
            return ExitCode::from(err.exit_code());
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", err.stderr_line());
            ExitCode::from(err.exit_code())
        }
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(read_graph(&read_file(path)?)?)
}

fn start_set(g: &Graph, start: &Option<Vec<usize>>) -> CliResult<VertexSet> {
    match start {
        None => Ok(g.full_set()),
        Some(vs) => {
            for &v in vs {
                if v >= g.n() {
                    return Err(CliError::usage(format!(
                        "start vertex {v} out of range for a graph on {} vertices",
                        g.n()
                    )));
                }
            }
            Ok(VertexSet::from_iter(g.n(), vs.iter().copied()))
        }
    }
}

fn solver_config(single_thread: bool) -> CliResult<SolverConfig> {
    let state_cap = match std::env::var("HUNT_STATE_CAP") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::usage(format!("HUNT_STATE_CAP is not a number: {text:?}")))?,
        Err(_) => DEFAULT_STATE_CAP,
    };
    Ok(SolverConfig { state_cap, time_limit: None, single_thread })
}

fn check_limit(limit: Option<usize>) -> CliResult<()> {
    if limit == Some(0) {
        return Err(CliError::usage("--limit must be at least 1"));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let structured = cli.format == OutputFormat::Structured;
    match cli.command {
        Command::Solve { graph, k, limit, start, single_thread } => {
            check_limit(limit)?;
            let g = load_graph(&graph)?;
            let start = start_set(&g, &start)?;
            let cfg = solver_config(single_thread)?;
            output::solve(&g, &start, k, limit, &cfg, structured)
        }
        Command::Verify { graph, strategy, start } => {
            let g = load_graph(&graph)?;
            let strat = read_strategy(&read_file(&strategy)?)?;
            let start = start_set(&g, &start)?;
            let verdict = hunt_core::verify_strategy(&g, &start, &strat)?;
            output::verify(&verdict, structured);
            Ok(())
        }
        Command::Recognize { graph, method } => {
            let g = load_graph(&graph)?;
            let method = match method {
                MethodArg::Direct => Method::Direct,
                MethodArg::ViaBg => Method::ViaDoubleCover,
            };
            output::recognize(&recognize(&g, method), structured);
            Ok(())
        }
        Command::Bounds { graph, l } => {
            check_limit(l)?;
            let g = load_graph(&graph)?;
            let report = bounds_chain(&g)?;
            let layered = l.map(|l| layered_min_cut(&g, l)).transpose()?;
            output::bounds(&report, l, layered.as_ref(), structured);
            Ok(())
        }
        Command::Generate { family, params, output } => {
            let family = parse_family(&family, &params)?;
            let g = generate(&family)?;
            emit_graph(&g, output.as_deref(), &[], structured)
        }
        Command::Reduce { gadget } => run_reduce(gadget, structured),
        Command::Separators { graph, problem } => {
            let g = load_graph(&graph)?;
            let (name, part) = match problem {
                ProblemArg::Evb => ("evb", exact_vertex_bisection(&g)?),
                ProblemArg::Bss => ("bss", bisection_stable_separator(&g)?),
            };
            output::separator(name, &part, structured);
            Ok(())
        }
        Command::Play { graph, k, blind } => {
            let g = load_graph(&graph)?;
            play::play(&g, k, blind)
        }
    }
}

fn parse_count(what: &str, text: &str) -> CliResult<usize> {
    text.parse().map_err(|_| CliError::usage(format!("{what}: expected a count, got {text:?}")))
}

fn parse_family(name: &str, params: &[String]) -> CliResult<Family> {
    let arity = |want: usize| {
        if params.len() == want {
            Ok(())
        } else {
            Err(CliError::usage(format!(
                "family {name} takes {want} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "path" => {
            arity(1)?;
            Ok(Family::Path(parse_count("path size", &params[0])?))
        }
        "cycle" => {
            arity(1)?;
            Ok(Family::Cycle(parse_count("cycle size", &params[0])?))
        }
        "complete" => {
            arity(1)?;
            Ok(Family::Complete(parse_count("clique size", &params[0])?))
        }
        "complete-with-loops" => {
            arity(1)?;
            Ok(Family::CompleteWithLoops(parse_count("clique size", &params[0])?))
        }
        "grid" => {
            arity(2)?;
            Ok(Family::Grid {
                rows: parse_count("rows", &params[0])?,
                cols: parse_count("cols", &params[1])?,
            })
        }
        "hypercube" => {
            arity(1)?;
            Ok(Family::Hypercube(parse_count("dimension", &params[0])?))
        }
        "spider" => {
            arity(2)?;
            Ok(Family::Spider {
                legs: parse_count("legs", &params[0])?,
                len: parse_count("leg length", &params[1])?,
            })
        }
        "h1" => Ok(Family::H1),
        "h2" => Ok(Family::H2),
        "h3" => Ok(Family::H3),
        "h4" => Ok(Family::H4),
        "random" => {
            arity(4)?;
            let prob = |what: &str, t: &str| -> CliResult<f64> {
                t.parse()
                    .map_err(|_| CliError::usage(format!("{what}: expected a probability, got {t:?}")))
            };
            Ok(Family::Random {
                n: parse_count("size", &params[0])?,
                edge_prob: prob("edge probability", &params[1])?,
                loop_prob: prob("loop probability", &params[2])?,
                seed: params[3]
                    .parse()
                    .map_err(|_| CliError::usage(format!("seed: expected an integer, got {:?}", params[3])))?,
            })
        }
        other => Err(CliError::usage(format!("unknown family {other:?}"))),
    }
}

/// Writes (or prints) a graph plus optional sidecar documents. Sidecars go to
/// `<output>.<suffix>.json`, or inline `#`-comment lines on stdout so the
/// stream stays a valid graph file.
fn emit_graph(
    g: &Graph,
    output: Option<&Path>,
    sidecars: &[(&str, serde_json::Value)],
    structured: bool,
) -> CliResult<()> {
    let text = write_graph(g);
    match output {
        Some(path) => {
            write_file(path, &text)?;
            let mut written = vec![path.display().to_string()];
            for (suffix, doc) in sidecars {
                let side = path.with_extension(format!("{suffix}.json"));
                write_file(&side, &format!("{:#}\n", doc))?;
                written.push(side.display().to_string());
            }
            if structured {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": g.n(),
                        "edges": g.edge_count(),
                        "loops": g.loop_count(),
                        "files": written,
                    })
                );
            } else {
                for file in written {
                    println!("wrote {file}");
                }
            }
        }
        None => {
            for (suffix, doc) in sidecars {
                println!("# {suffix}: {doc}");
            }
            print!("{text}");
        }
    }
    Ok(())
}

fn parse_number_list(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|t| parse_count("number", t.trim()))
        .collect()
}

fn run_reduce(cmd: ReduceCommand, structured: bool) -> CliResult<()> {
    match cmd {
        ReduceCommand::DoubleCover { graph, output } => {
            let g = load_graph(&graph)?;
            emit_graph(&double_cover(&g), output.as_deref(), &[], structured)
        }
        ReduceCommand::LoopClique { graph, p, output } => {
            let g = load_graph(&graph)?;
            emit_graph(&loop_clique_product(&g, p)?, output.as_deref(), &[], structured)
        }
        ReduceCommand::Join { left, right, output } => {
            let l = load_graph(&left)?;
            let r = load_graph(&right)?;
            emit_graph(&join(&l, &r), output.as_deref(), &[], structured)
        }
        ReduceCommand::ThreePartition { numbers, partition, output } => {
            let numbers = parse_number_list(&numbers)?;
            let (g, layout) = three_partition_gadget(&numbers)?;
            let mut sidecars = vec![("layout", output::three_partition_layout(&layout))];
            if let Some(part) = partition {
                let groups: Vec<Vec<usize>> = part
                    .split(';')
                    .map(parse_number_list)
                    .collect::<CliResult<_>>()?;
                let strat = three_partition_strategy(&layout, &groups)?;
                sidecars.push(("strategy", output::strategy_json(&strat)));
            }
            emit_graph(&g, output.as_deref(), &sidecars, structured)
        }
        ReduceCommand::StartSet { graph, k, start, inner, output } => {
            let g = load_graph(&graph)?;
            let start = start_set(&g, &start)?;
            let (h, layout) = start_set_gadget(&g, &start, k)?;
            let mut sidecars = vec![("layout", output::start_set_layout(&layout))];
            if let Some(inner_path) = inner {
                let inner = read_strategy(&read_file(&inner_path)?)?;
                let wrapped = start_set_gadget_strategy(&layout, &inner)?;
                sidecars.push(("strategy", output::strategy_json(&wrapped)));
            }
            emit_graph(&h, output.as_deref(), &sidecars, structured)
        }
        ReduceCommand::WithClique { graph, k, output } => {
            let g = load_graph(&graph)?;
            emit_graph(&union_with_clique(&g, k)?, output.as_deref(), &[], structured)
        }
        ReduceCommand::WithSplit { graph, k, output } => {
            let g = load_graph(&graph)?;
            emit_graph(&union_with_complete_split(&g, k)?, output.as_deref(), &[], structured)
        }
        ReduceCommand::Blowup { graph, m, output } => {
            let g = load_graph(&graph)?;
            let blown = clique_blowup(&g, m)?;
            let blocks: Vec<serde_json::Value> = (0..g.n())
                .map(|v| {
                    serde_json::json!({ "name": format!("H{v}"), "lo": v * m, "hi": (v + 1) * m })
                })
                .collect();
            let layout = serde_json::json!({ "blocks": blocks });
            emit_graph(&blown, output.as_deref(), &[("layout", layout)], structured)
        }
    }
}
