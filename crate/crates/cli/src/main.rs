//! Command-line surface over the cyclespan library.
//!
//! Exit codes are a stable contract: 0 for success or a true verdict, 1
//! for a false verdict or a failed search, 2 for usage, parse, or config
//! errors. Every error leaves one machine-readable line on stderr.

mod config;
mod experiment;
mod svg;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use config::{read_config, ConfigFile};
use cyclespan::edgespace::Gf2Basis;
use cyclespan::graph::{
    circulant, complete, densify_to_min_degree, gnp_generate, parse_edge_lines, petersen,
    pseudorandomness_report, read_graph, write_graph, BetaSource, Graph, ReportConfig,
    SpectralConfig,
};
use cyclespan::hamilton::for_each_hamilton_cycle;
use cyclespan::pipeline::{
    express_cycle, hamilton_basis, odd_intersection_hamilton, parse_decomposition,
    render_decomposition, resolve_variant, PipelineConfig, VariantChoice,
};
use cyclespan::seeds;
use experiment::{parse_density, render_csv, run_experiment, ExperimentSpec};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclespan", version, about = "Hamilton cycle bases of GF(2) cycle spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file
    Gen(GenArgs),
    /// Run pseudorandomness checks against a target density
    Check(CheckArgs),
    /// Decide by enumeration whether Hamilton cycles span the cycle space
    SpanVerify(SpanVerifyArgs),
    /// Compute a Hamilton cycle basis of the cycle space
    Decompose(DecomposeArgs),
    /// Express an edge set as a combination of stored basis cycles
    Express(ExpressArgs),
    /// Find one Hamilton cycle meeting an edge set an odd number of times
    OddHam(OddHamArgs),
    /// Run a (n, p) seed grid and write one CSV row per run
    Experiment(ExperimentArgs),
}

#[derive(clap::Args)]
#[command(group = ArgGroup::new("model").required(true))]
struct GenArgs {
    /// Vertex count (all models except --petersen)
    #[arg(long)]
    n: Option<usize>,
    /// Binomial model with this edge probability
    #[arg(long, group = "model")]
    p: Option<f64>,
    /// Binomial model with density from a rule like `5lnn/n`
    #[arg(long, group = "model")]
    p_rule: Option<String>,
    /// Circulant graph with these strides
    #[arg(long, group = "model", value_delimiter = ',')]
    circulant: Option<Vec<usize>>,
    /// Complete graph
    #[arg(long, group = "model")]
    complete: bool,
    /// The Petersen graph
    #[arg(long, group = "model")]
    petersen: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add random edges at low-degree vertices until this minimum degree
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct CheckArgs {
    graph: PathBuf,
    /// Density the checks compare against
    #[arg(long)]
    p: f64,
    /// Jumbledness parameter: a number, `2sqrtnp`, or `spectral`
    #[arg(long, default_value = "2sqrtnp")]
    beta: String,
    /// Sample count for checks too large to run exhaustively
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    /// Slack on the cut density bound
    #[arg(long, default_value_t = 0.01)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(clap::Args)]
struct SpanVerifyArgs {
    graph: PathBuf,
    /// Largest order accepted; enumeration is factorial beyond toy sizes
    #[arg(long, default_value_t = 14)]
    limit: usize,
}

#[derive(clap::Args)]
struct PipelineFlags {
    /// Configuration file; flags given here win over it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Switcher builds attempted per certificate
    #[arg(long)]
    retries: Option<usize>,
    /// Whole-cycle attempts per certificate before switchers start
    #[arg(long)]
    direct_attempts: Option<usize>,
    /// Radius bound for switcher cores
    #[arg(long)]
    ell: Option<usize>,
    /// Density margin for variant resolution and connector choice
    #[arg(long)]
    c_const: Option<usize>,
    #[arg(long)]
    backtrack_limit: Option<usize>,
    #[arg(long)]
    backtrack_budget: Option<u64>,
    #[arg(long)]
    base_edge_attempts: Option<usize>,
    #[arg(long)]
    max_rotations: Option<u64>,
    /// Rotations without progress before a restart; 0 scales with n
    #[arg(long)]
    restart_after: Option<u64>,
}

#[derive(clap::Args)]
struct DecomposeArgs {
    graph: PathBuf,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    pipeline: PipelineFlags,
}

#[derive(clap::Args)]
struct ExpressArgs {
    graph: PathBuf,
    /// Decomposition file produced by `decompose`
    #[arg(long)]
    basis: PathBuf,
    /// Edge list file (`u v` lines) for the target vector
    #[arg(long)]
    target: PathBuf,
}

#[derive(clap::Args)]
struct OddHamArgs {
    graph: PathBuf,
    /// Edge list file (`u v` lines) the cycle must meet oddly
    #[arg(long)]
    r: PathBuf,
    #[command(flatten)]
    pipeline: PipelineFlags,
}

#[derive(clap::Args)]
struct ExperimentArgs {
    /// Experiment file with an [experiment] grid section
    spec: PathBuf,
    /// CSV path; overrides `out` from the file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads, 0 = all cores
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Report wall_ms as 0 so replays are byte-identical
    #[arg(long)]
    no_timing: bool,
    /// Also render a success-rate scatter plot
    #[arg(long)]
    emit_svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Auto,
    Dense,
    Sparse,
}

impl From<VariantArg> for VariantChoice {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Auto => VariantChoice::Auto,
            VariantArg::Dense => VariantChoice::Dense,
            VariantArg::Sparse => VariantChoice::Sparse,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Check(args) => check(args),
        Command::SpanVerify(args) => span_verify(args),
        Command::Decompose(args) => decompose(args),
        Command::Express(args) => express(args),
        Command::OddHam(args) => odd_ham(args),
        Command::Experiment(args) => experiment_cmd(args),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    read_graph(path).with_context(|| format!("graph {}", path.display()))
}

fn gen(args: GenArgs) -> Result<u8> {
    let need_n = || args.n.context("--n is required for this model");
    let g = if args.petersen {
        petersen()
    } else if args.complete {
        complete(need_n()?)
    } else if let Some(strides) = &args.circulant {
        circulant(need_n()?, strides)?
    } else {
        let n = need_n()?;
        let p = match (args.p, &args.p_rule) {
            (Some(p), None) => {
                if !(0.0..=1.0).contains(&p) {
                    bail!("--p {p} outside [0, 1]");
                }
                p
            }
            (None, Some(rule)) => parse_density(rule)?.resolve(n),
            _ => unreachable!("the model group admits exactly one choice"),
        };
        gnp_generate(n, p, args.seed)
    };
    let g = match args.min_degree {
        Some(target) => {
            densify_to_min_degree(&g, target, seeds::derive(args.seed, seeds::stage::GRAPH_GEN, 1))
        }
        None => g,
    };
    write_graph(&args.out, &g).with_context(|| format!("writing {}", args.out.display()))?;
    Ok(0)
}

fn check(args: CheckArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    if !(0.0..=1.0).contains(&args.p) {
        bail!("--p {} outside [0, 1]", args.p);
    }
    let source = match args.beta.as_str() {
        "spectral" => BetaSource::Spectral,
        "2sqrtnp" | "2sqrt(np)" => BetaSource::TwoSqrtNp,
        word => BetaSource::Value(
            word.parse().with_context(|| format!("--beta `{word}`"))?,
        ),
    };
    let cfg = ReportConfig {
        eps: args.eps,
        jumbled_trials: args.trials,
        seed: args.seed,
        spectral: SpectralConfig::default(),
    };
    let report = pseudorandomness_report(&g, args.p, source, &cfg)?;
    print!("{report}");
    println!("all_pass: {}", report.all_pass());
    Ok(u8::from(!report.all_pass()))
}

fn span_verify(args: SpanVerifyArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    if g.n() > args.limit {
        bail!("order {} exceeds the enumeration limit {}", g.n(), args.limit);
    }
    let target = g.m() + g.component_count() - g.n();
    let mut spanned = Gf2Basis::new();
    for_each_hamilton_cycle(&g, &mut |cycle| {
        spanned.insert(&g.cycle_vector(cycle).expect("enumerated cycles are real"));
        if spanned.rank() == target {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let spans = spanned.rank() == target;
    println!("spans={spans}");
    println!("rank={}", spanned.rank());
    println!("target={target}");
    Ok(u8::from(!spans))
}

/// Builds a pipeline configuration from file sections `[pipeline]`,
/// `[search]`, and `[posa]`.
fn pipeline_config_from(cfg: &ConfigFile) -> Result<PipelineConfig> {
    let mut pc = PipelineConfig::default();
    if let Some(seed) = cfg.parse("pipeline", "seed")? {
        pc.seed = seed;
    }
    if let Some(word) = cfg.get("pipeline", "variant") {
        pc.variant = parse_variant(word)?;
    }
    if let Some(v) = cfg.parse("pipeline", "retries")? {
        pc.retries = v;
    }
    if let Some(v) = cfg.parse("pipeline", "direct-attempts")? {
        pc.direct_attempts = v;
    }
    if let Some(v) = cfg.parse("pipeline", "ell")? {
        pc.ell_override = Some(v);
    }
    if let Some(v) = cfg.parse("pipeline", "c-const")? {
        pc.c_const = v;
    }
    if let Some(v) = cfg.parse("search", "backtrack-limit")? {
        pc.search.backtrack_limit = v;
    }
    if let Some(v) = cfg.parse("search", "backtrack-budget")? {
        pc.search.backtrack_budget = v;
    }
    if let Some(v) = cfg.parse("search", "base-edge-attempts")? {
        pc.search.base_edge_attempts = v;
    }
    if let Some(v) = cfg.parse("posa", "max-rotations")? {
        pc.search.posa.max_rotations = v;
    }
    if let Some(v) = cfg.parse("posa", "restart-after")? {
        pc.search.posa.restart_after = v;
    }
    Ok(pc)
}

fn parse_variant(word: &str) -> Result<VariantChoice> {
    match word {
        "auto" => Ok(VariantChoice::Auto),
        "dense" => Ok(VariantChoice::Dense),
        "sparse" => Ok(VariantChoice::Sparse),
        _ => bail!("variant `{word}`: expected auto, dense, or sparse"),
    }
}

impl PipelineFlags {
    /// File config first, then flags on top.
    fn resolve(&self) -> Result<PipelineConfig> {
        let mut pc = match &self.config {
            Some(path) => pipeline_config_from(&read_config(path)?)?,
            None => PipelineConfig::default(),
        };
        if let Some(seed) = self.seed {
            pc.seed = seed;
        }
        if let Some(v) = self.variant {
            pc.variant = v.into();
        }
        if let Some(v) = self.retries {
            pc.retries = v;
        }
        if let Some(v) = self.direct_attempts {
            pc.direct_attempts = v;
        }
        if let Some(v) = self.ell {
            pc.ell_override = Some(v);
        }
        if let Some(v) = self.c_const {
            pc.c_const = v;
        }
        if let Some(v) = self.backtrack_limit {
            pc.search.backtrack_limit = v;
        }
        if let Some(v) = self.backtrack_budget {
            pc.search.backtrack_budget = v;
        }
        if let Some(v) = self.base_edge_attempts {
            pc.search.base_edge_attempts = v;
        }
        if let Some(v) = self.max_rotations {
            pc.search.posa.max_rotations = v;
        }
        if let Some(v) = self.restart_after {
            pc.search.posa.restart_after = v;
        }
        Ok(pc)
    }
}

fn decompose(args: DecomposeArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let pc = args.pipeline.resolve()?;
    match hamilton_basis(&g, &pc) {
        Ok(basis) => {
            let text = render_decomposition(&g, &basis);
            match &args.out {
                Some(path) => {
                    std::fs::write(path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!("rank={}", basis.rank());
                    println!("target={}", basis.target_rank);
                    println!("variant={}", basis.variant);
                    println!("iterations={}", basis.iterations.len());
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Err(e) => {
            eprintln!("error: decompose: {e}");
            Ok(1)
        }
    }
}

fn express(args: ExpressArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.basis)
        .with_context(|| format!("basis {}", args.basis.display()))?;
    let (bg, basis) = parse_decomposition(&text)
        .with_context(|| format!("basis {}", args.basis.display()))?;
    if bg.n() != g.n() || bg.edges() != g.edges() {
        bail!("basis {} was built over a different graph", args.basis.display());
    }
    let target_text = std::fs::read_to_string(&args.target)
        .with_context(|| format!("target {}", args.target.display()))?;
    let target = parse_edge_lines(&g, &target_text)
        .with_context(|| format!("target {}", args.target.display()))?;
    match express_cycle(&g, &basis.cycles, &target)? {
        Some(indices) => {
            let words: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
            println!("combination: {}", words.join(" "));
            Ok(0)
        }
        None => {
            println!("not in cycle space");
            Ok(1)
        }
    }
}

fn odd_ham(args: OddHamArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let pc = args.pipeline.resolve()?;
    let text = std::fs::read_to_string(&args.r)
        .with_context(|| format!("edge set {}", args.r.display()))?;
    let r = parse_edge_lines(&g, &text)
        .with_context(|| format!("edge set {}", args.r.display()))?;
    let variant = resolve_variant(&g, &pc);
    match odd_intersection_hamilton(&g, &r, &pc, variant, 0) {
        Ok((cycle, stats)) => {
            let words: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            println!("cycle: {}", words.join(" "));
            if let Some(via) = stats.via {
                println!("via: {via}");
            }
            Ok(0)
        }
        Err(failure) => {
            eprintln!("error: odd-ham: {failure}");
            Ok(1)
        }
    }
}

fn experiment_cmd(args: ExperimentArgs) -> Result<u8> {
    let cfg = read_config(&args.spec)?;
    let spec = ExperimentSpec::from_config(&cfg)
        .with_context(|| format!("spec {}", args.spec.display()))?;
    let out = args
        .out
        .clone()
        .or_else(|| spec.out.clone())
        .context("no output path: pass --out or set [experiment] out")?;
    let rows = run_experiment(&spec, args.jobs, !args.no_timing)?;
    std::fs::write(&out, render_csv(&rows))
        .with_context(|| format!("writing {}", out.display()))?;
    if let Some(svg_path) = &args.emit_svg {
        std::fs::write(svg_path, svg::render_scatter(&rows))
            .with_context(|| format!("writing {}", svg_path.display()))?;
    }
    let successes = rows.iter().filter(|r| r.success).count();
    println!("rows={}", rows.len());
    println!("successes={successes}");
    Ok(0)
}
