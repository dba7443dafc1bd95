//! Experiment grids: cells of (n, density) run over many seeds, one CSV
//! row per run.
//!
//! The CSV schema is a stable contract:
//!
//! ```text
//! seed,n,p_rule,p,variant,success,rank,target_rank,iterations,switcher_retries,posa_rotations,wall_ms
//! ```
//!
//! Rows appear in (cell, seed) order regardless of worker count, and with
//! timing suppressed two runs of the same spec are byte-identical.

use crate::config::ConfigFile;
use anyhow::{bail, Context, Result};
use cyclespan::graph::gnp_generate;
use cyclespan::pipeline::{hamilton_basis, resolve_variant, PipelineConfig, PipelineError};
use cyclespan::seeds;
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

pub const CSV_HEADER: &str = "seed,n,p_rule,p,variant,success,rank,target_rank,iterations,\
                              switcher_retries,posa_rotations,wall_ms";

/// Edge density of one grid cell: a literal probability or `c·ln n / n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Density {
    Literal(f64),
    LogRule { c: f64 },
}

impl Density {
    pub fn resolve(self, n: usize) -> f64 {
        match self {
            Density::Literal(p) => p,
            Density::LogRule { c } => (c * (n as f64).ln() / n as f64).min(1.0),
        }
    }
}

impl std::fmt::Display for Density {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Density::Literal(p) => write!(f, "{p}"),
            Density::LogRule { c } => write!(f, "{c}lnn/n"),
        }
    }
}

/// Accepts a float or `<c>lnn/n`, e.g. `0.3`, `5lnn/n`, `4.5lnn/n`.
pub fn parse_density(word: &str) -> Result<Density> {
    if let Some(c) = word.strip_suffix("lnn/n") {
        let c: f64 = c.parse().with_context(|| format!("density rule `{word}`"))?;
        if !(c > 0.0) {
            bail!("density rule `{word}`: the constant must be positive");
        }
        return Ok(Density::LogRule { c });
    }
    let p: f64 = word.parse().with_context(|| format!("density `{word}`"))?;
    if !(0.0..=1.0).contains(&p) {
        bail!("density `{word}` outside [0, 1]");
    }
    Ok(Density::Literal(p))
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub ns: Vec<usize>,
    pub densities: Vec<Density>,
    /// Runs per cell; run j uses seed `seed_base + j`.
    pub seeds: usize,
    pub seed_base: u64,
    /// Even n is an error unless the grid is declared a negative control.
    pub allow_even: bool,
    pub out: Option<PathBuf>,
    pub pipeline: PipelineConfig,
}

impl ExperimentSpec {
    pub fn from_config(cfg: &ConfigFile) -> Result<Self> {
        let ns: Vec<usize> = cfg
            .parse_list("experiment", "n")?
            .context("config [experiment] n: required")?;
        let p_words = cfg
            .get("experiment", "p")
            .context("config [experiment] p: required")?;
        let densities = p_words
            .split_whitespace()
            .map(parse_density)
            .collect::<Result<Vec<_>>>()?;
        let spec = ExperimentSpec {
            ns,
            densities,
            seeds: cfg.parse("experiment", "seeds")?.unwrap_or(1),
            seed_base: cfg.parse("experiment", "seed-base")?.unwrap_or(0),
            allow_even: cfg.parse("experiment", "allow-even")?.unwrap_or(false),
            out: cfg.get("experiment", "out").map(PathBuf::from),
            pipeline: crate::pipeline_config_from(cfg)?,
        };
        if spec.ns.is_empty() || spec.densities.is_empty() {
            bail!("config [experiment]: empty grid");
        }
        if spec.seeds == 0 {
            bail!("config [experiment] seeds: need at least 1");
        }
        if !spec.allow_even {
            if let Some(n) = spec.ns.iter().find(|&&n| n % 2 == 0) {
                bail!(
                    "config [experiment] n: {n} is even; spanning needs odd order \
                     (set allow-even = true for a negative control)"
                );
            }
        }
        Ok(spec)
    }

    fn runs(&self) -> Vec<RunPlan> {
        let mut out = Vec::new();
        for (ci, (&n, &density)) in self
            .ns
            .iter()
            .flat_map(|n| self.densities.iter().map(move |d| (n, d)))
            .enumerate()
        {
            for j in 0..self.seeds {
                out.push(RunPlan { cell: ci as u64, n, density, seed: self.seed_base + j as u64 });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
struct RunPlan {
    cell: u64,
    n: usize,
    density: Density,
    seed: u64,
}

/// One CSV row in memory.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub seed: u64,
    pub n: usize,
    pub p_rule: String,
    pub p: f64,
    pub variant: String,
    pub success: bool,
    pub rank: usize,
    pub target_rank: usize,
    pub iterations: usize,
    pub switcher_retries: usize,
    pub posa_rotations: u64,
    pub wall_ms: u64,
}

fn error_rank(e: &PipelineError) -> usize {
    match e {
        PipelineError::Certificate { rank, .. }
        | PipelineError::OddIntersectionFailed { rank, .. } => *rank,
        _ => 0,
    }
}

fn run_one(plan: &RunPlan, spec: &ExperimentSpec, timing: bool) -> RunRecord {
    let p = plan.density.resolve(plan.n);
    let g = gnp_generate(
        plan.n,
        p,
        seeds::derive(plan.seed, seeds::stage::GRAPH_GEN, plan.cell),
    );
    let mut cfg = spec.pipeline.clone();
    cfg.seed = plan.seed;
    let start = Instant::now();
    let outcome = hamilton_basis(&g, &cfg);
    let wall_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    let target_rank = g.m() + g.component_count() - g.n();
    let base = RunRecord {
        seed: plan.seed,
        n: plan.n,
        p_rule: plan.density.to_string(),
        p,
        variant: resolve_variant(&g, &cfg).to_string(),
        success: false,
        rank: 0,
        target_rank,
        iterations: 0,
        switcher_retries: 0,
        posa_rotations: 0,
        wall_ms,
    };
    match outcome {
        Ok(basis) => RunRecord {
            variant: basis.variant.to_string(),
            success: true,
            rank: basis.rank(),
            iterations: basis.iterations.len(),
            switcher_retries: basis.total_retries(),
            posa_rotations: basis.total_rotations(),
            ..base
        },
        Err(e) => {
            // Every completed round grew the rank by one over the seed cycle.
            let rank = error_rank(&e);
            RunRecord { rank, iterations: rank.saturating_sub(1), ..base }
        }
    }
}

/// Runs the whole grid on `jobs` workers (0 = all cores) and returns rows
/// in (cell, seed) order.
pub fn run_experiment(spec: &ExperimentSpec, jobs: usize, timing: bool) -> Result<Vec<RunRecord>> {
    let plans = spec.runs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("worker pool")?;
    Ok(pool.install(|| {
        plans
            .par_iter()
            .map(|plan| run_one(plan, spec, timing))
            .collect()
    }))
}

pub fn render_csv(rows: &[RunRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.seed,
            r.n,
            r.p_rule,
            r.p,
            r.variant,
            r.success,
            r.rank,
            r.target_rank,
            r.iterations,
            r.switcher_retries,
            r.posa_rotations,
            r.wall_ms,
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    #[test]
    fn density_parses_both_forms() {
        assert_eq!(parse_density("0.25").unwrap(), Density::Literal(0.25));
        let rule = parse_density("4.5lnn/n").unwrap();
        assert_eq!(rule, Density::LogRule { c: 4.5 });
        let n = 101usize;
        let expect = 4.5 * (n as f64).ln() / n as f64;
        assert!((rule.resolve(n) - expect).abs() < 1e-12);
        assert_eq!(rule.to_string(), "4.5lnn/n");
        assert!(parse_density("1.5").is_err());
        assert!(parse_density("xlnn/n").is_err());
    }

    #[test]
    fn grid_rejects_even_orders_unless_allowed() {
        let cfg = parse_config("[experiment]\nn = 50\np = 0.5\n").unwrap();
        let e = ExperimentSpec::from_config(&cfg).unwrap_err();
        assert!(e.to_string().contains("even"));
        let cfg = parse_config("[experiment]\nn = 50\np = 0.5\nallow-even = true\n").unwrap();
        assert!(ExperimentSpec::from_config(&cfg).is_ok());
    }

    #[test]
    fn rows_follow_cell_then_seed_order() {
        let cfg = parse_config(
            "[experiment]\nn = 5 7\np = 0.9 1.0\nseeds = 2\nseed-base = 10\n",
        )
        .unwrap();
        let spec = ExperimentSpec::from_config(&cfg).unwrap();
        let rows = run_experiment(&spec, 2, false).unwrap();
        assert_eq!(rows.len(), 8);
        let key: Vec<(usize, String, u64)> = rows
            .iter()
            .map(|r| (r.n, r.p_rule.clone(), r.seed))
            .collect();
        let mut sorted = key.clone();
        sorted.sort();
        assert_eq!(key, sorted);
        assert!(rows.iter().all(|r| r.wall_ms == 0));
        let csv = render_csv(&rows);
        assert!(csv.starts_with("seed,n,p_rule,p,variant,success,"));
        assert_eq!(csv.lines().count(), 9);
    }
}
