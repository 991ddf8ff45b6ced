//! `netcover` command line.
//!
//! Exit codes: 0 success, 1 runtime error, 2 usage error, 3 run ended
//! exhausted, 4 strict audit abort.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use netcover::config::ExperimentConfig;
use netcover::experiment::{aggregate, run_sweep};
use netcover::{load_edge_list, plot, report, write_edge_list};
use netcover_core::oracle::{self, MinCover};
use netcover_core::{
    default_er_probability, run, Algorithm, AuditMode, GenSpec, Graph, KnowledgeLevel, Model,
    PolicyConfig, RunError, Termination, Zeta,
};
use serde_json::json;

const EXIT_ERROR: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_AUDIT: u8 = 4;

#[derive(Parser)]
#[command(name = "netcover", version, about = "Coverage heuristics under partial topology knowledge")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Ba,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Scp1,
    Scp2,
    Scp3,
    Scp4,
    Mcc1,
    Mcc2,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Scp1 => Algorithm::Scp1,
            AlgoArg::Scp2 => Algorithm::Scp2,
            AlgoArg::Scp3 => Algorithm::Scp3,
            AlgoArg::Scp4 => Algorithm::Scp4,
            AlgoArg::Mcc1 => Algorithm::Mcc1,
            AlgoArg::Mcc2 => Algorithm::Mcc2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    NodeList,
    OneHop,
    TwoHop,
    NodeListPlusTwoHop,
    Full,
}

impl From<LevelArg> for KnowledgeLevel {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::NodeList => KnowledgeLevel::NodeList,
            LevelArg::OneHop => KnowledgeLevel::OneHop,
            LevelArg::TwoHop => KnowledgeLevel::TwoHop,
            LevelArg::NodeListPlusTwoHop => KnowledgeLevel::NodeListPlusTwoHop,
            LevelArg::Full => KnowledgeLevel::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaArg {
    Uniform,
    Degree,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph as a canonical edge list.
    Generate {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        /// Edge probability (er only); defaults to min(1, 2 ln n / n).
        #[arg(long)]
        p: Option<f64>,
        /// Edges per new vertex (ba only).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one policy on one graph and print the run record as JSON.
    Run {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Knowledge level; defaults to the policy's own level.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[arg(long, default_value_t = PolicyConfig::DEFAULT_ALPHA)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "uniform")]
        zeta: ZetaArg,
        #[arg(long)]
        initial: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum recruits; unlimited when omitted.
        #[arg(long)]
        budget: Option<usize>,
        /// Abort on the first query the level does not permit.
        #[arg(long)]
        strict_audit: bool,
    },
    /// Run an experiment sweep and write CSVs, plot and effective config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        master_seed: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        instances_per_size: Option<usize>,
        #[arg(long)]
        initial_nodes_per_graph: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Exact maximum (connected) coverage by exhaustive search.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        /// Budget; when omitted, find the fewest recruits covering the graph.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Plot a summary CSV as SVG.
    Plot {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "Number of recruited nodes needed vs number of nodes")]
        title: String,
    },
}

struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}
impl std::fmt::Debug for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}
impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn generate(model: ModelArg, n: usize, p: Option<f64>, m: Option<usize>, seed: u64, out: Option<PathBuf>) -> Result<u8> {
    let model = match model {
        ModelArg::Er => {
            if m.is_some() {
                return Err(usage("--m only applies to --model ba"));
            }
            Model::ErdosRenyi {
                p: match p {
                    Some(p) => p,
                    None => default_er_probability(n).map_err(|e| usage(e.to_string()))?,
                },
            }
        }
        ModelArg::Ba => {
            if p.is_some() {
                return Err(usage("--p only applies to --model er"));
            }
            Model::BarabasiAlbert {
                edges_per_vertex: m.unwrap_or(2),
            }
        }
    };
    let graph = GenSpec { model, n, seed }
        .generate()
        .map_err(|e| usage(e.to_string()))?;
    let text = write_edge_list(&graph);
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn run_one(
    graph: &Path,
    algo: AlgoArg,
    level: Option<LevelArg>,
    alpha: f64,
    zeta: ZetaArg,
    initial: Option<usize>,
    seed: u64,
    budget: Option<usize>,
    strict: bool,
) -> Result<u8> {
    let g = read_graph(graph)?;
    let algorithm = Algorithm::from(algo);
    let level = level.map(KnowledgeLevel::from).unwrap_or(algorithm.native_level());
    let policy = PolicyConfig {
        algorithm,
        zeta: match zeta {
            ZetaArg::Uniform => Zeta::Uniform,
            ZetaArg::Degree => Zeta::Degree,
        },
        alpha,
        initial_node: initial,
        seed,
    };
    let mode = if strict { AuditMode::Strict } else { AuditMode::Advisory };
    match run(&g, &policy, level, budget, mode) {
        Ok(result) => {
            let code = if result.termination == Termination::Exhausted { EXIT_EXHAUSTED } else { 0 };
            let record = json!({
                "algorithm": algorithm.id(),
                "level": level.name(),
                "seed": seed,
                "recruits": result.recruits(),
                "final_cover": result.final_cover(),
                "termination": result.termination.name(),
                "illegal_queries": result.audit.illegal(),
                "result": result,
            });
            println!("{}", serde_json::to_string_pretty(&record)?);
            Ok(code)
        }
        Err(RunError::Audit(v)) => {
            eprintln!("audit abort: {v}");
            println!("{}", serde_json::to_string_pretty(&json!({ "audit_violation": v.event, "level": level.name() }))?);
            Ok(EXIT_AUDIT)
        }
        Err(e) => Err(usage(e.to_string())),
    }
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    config: &Path,
    out_dir: &Path,
    workers: Option<usize>,
    master_seed: Option<u64>,
    sizes: Option<Vec<usize>>,
    instances: Option<usize>,
    initials: Option<usize>,
    budget: Option<usize>,
) -> Result<u8> {
    let mut cfg = ExperimentConfig::load(config)?;
    if let Some(s) = master_seed {
        cfg.master_seed = s;
    }
    if let Some(s) = sizes {
        cfg.sizes = s;
    }
    if let Some(i) = instances {
        cfg.instances_per_size = i;
    }
    if let Some(i) = initials {
        cfg.initial_nodes_per_graph = i;
    }
    if budget.is_some() {
        cfg.budget = budget;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;

    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let records = run_sweep(&cfg, workers)?;
    let rows = aggregate(&records);
    let summary = out_dir.join(&cfg.output.summary_csv);
    let detail = out_dir.join(&cfg.output.detail_csv);
    let plot_path = out_dir.join(&cfg.output.plot);
    report::emit_csv(&rows, &summary)?;
    report::emit_detail_csv(&records, &detail)?;
    plot::emit_plot(&rows, &plot_path, "Number of recruited nodes needed vs number of nodes")?;
    fs::write(out_dir.join("effective-config.toml"), cfg.to_toml())?;

    let illegal: usize = records.iter().map(|r| r.audit.illegal()).sum();
    if illegal > 0 {
        eprintln!("warning: {illegal} illegal knowledge queries across the sweep, see {}", detail.display());
    }
    eprintln!("{} runs, wrote {}, {}, {}", records.len(), summary.display(), detail.display(), plot_path.display());
    print!("{}", report::summary_csv_string(&rows));
    Ok(0)
}

fn run_oracle(graph: &Path, k: Option<usize>, connected: bool) -> Result<u8> {
    let g = read_graph(graph)?;
    let value = match k {
        Some(k) => {
            let r = if connected {
                oracle::brute_force_max_connected_cover(&g, k)
            } else {
                oracle::brute_force_max_coverage(&g, k)
            }
            .map_err(|e| usage(e.to_string()))?;
            serde_json::to_value(&r)?
        }
        None => match oracle::min_recruits_full_cover(&g, connected).map_err(|e| usage(e.to_string()))? {
            MinCover::Found(r) => json!({ "feasible": true, "min_recruits": r.best_set.len(), "result": r }),
            MinCover::Infeasible { explored } => json!({ "feasible": false, "explored": explored }),
        },
    };
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(0)
}

fn run_plot(csv: &Path, out: &Path, title: &str) -> Result<u8> {
    let file = fs::File::open(csv).with_context(|| format!("opening {}", csv.display()))?;
    let rows = report::read_summary(file).with_context(|| format!("parsing {}", csv.display()))?;
    plot::emit_plot(&rows, out, title)?;
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate { model, n, p, m, seed, out } => generate(model, n, p, m, seed, out),
        Command::Run {
            graph,
            algo,
            level,
            alpha,
            zeta,
            initial,
            seed,
            budget,
            strict_audit,
        } => run_one(&graph, algo, level, alpha, zeta, initial, seed, budget, strict_audit),
        Command::Sweep {
            config,
            out_dir,
            workers,
            master_seed,
            sizes,
            instances_per_size,
            initial_nodes_per_graph,
            budget,
        } => sweep(&config, &out_dir, workers, master_seed, sizes, instances_per_size, initial_nodes_per_graph, budget),
        Command::Oracle { graph, k, connected } => run_oracle(&graph, k, connected),
        Command::Plot { csv, out, title } => run_plot(&csv, &out, &title),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::from(EXIT_ERROR)
            }
        }
    }
}
