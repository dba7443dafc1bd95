//! Pseudorandomness checks: jumbledness, expansion, cut density, the
//! pair-edge property, robust small diameter, and a combined report.
//!
//! Each check runs either exhaustively (small graphs, hard verdict) or on
//! seeded random samples (large graphs; a failed sample is a hard
//! counterexample, a passed scan is evidence). Sampled scans are
//! deterministic per seed.

use super::{spectral_beta, Graph, SpectralConfig};
use crate::edgespace::EdgeVector;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("exhaustive {what} scan limited to {limit}, got {got}")]
    TooLarge { what: &'static str, got: u64, limit: u64 },
    #[error("{what} requires {requirement}")]
    Invalid { what: &'static str, requirement: &'static str },
}

/// Scan strategy shared by the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled { trials: usize, seed: u64 },
    /// Exhaustive when the subset budget allows, otherwise sampled with a
    /// default trial count.
    Auto { seed: u64 },
}

/// Largest `n` for exhaustive subset scans (2^n subsets).
pub const JUMBLED_EXHAUSTIVE_LIMIT: usize = 20;
/// Largest `n` for exhaustive bipartition scans (2^(n-1) cuts).
pub const CUT_EXHAUSTIVE_LIMIT: usize = 24;
/// Budget for exhaustive combination scans.
pub const COMBINATION_BUDGET: u64 = 1_000_000;

const AUTO_TRIALS: usize = 2_000;

/// The subset a jumbledness scan found most extreme, with its slack
/// `beta |U| - |e(U) - p C(|U|, 2)|`. Negative slack is a violation.
#[derive(Debug, Clone)]
pub struct JumbledWitness {
    pub subset: Vec<u32>,
    pub edges_inside: usize,
    pub expected: f64,
    pub slack: f64,
}

#[derive(Debug, Clone)]
pub struct JumbledScan {
    pub pass: bool,
    /// Worst subset seen (minimum slack), even when passing.
    pub worst: JumbledWitness,
    pub subsets_checked: u64,
}

fn jumbled_slack(p: f64, beta: f64, size: usize, inside: usize) -> (f64, f64) {
    let pairs = size as f64 * (size as f64 - 1.0) / 2.0;
    let expected = p * pairs;
    (expected, beta * size as f64 - (inside as f64 - expected).abs())
}

/// Checks `|e(U) - p C(|U|,2)| <= beta |U|` over all 2^n subsets.
///
/// Gray-code walk, one vertex flip per step. Refuses graphs past
/// [`JUMBLED_EXHAUSTIVE_LIMIT`].
pub fn is_jumbled_exhaustive(
    g: &Graph,
    p: f64,
    beta: f64,
) -> Result<JumbledScan, CheckError> {
    let n = g.n();
    if n > JUMBLED_EXHAUSTIVE_LIMIT {
        return Err(CheckError::TooLarge {
            what: "jumbledness",
            got: n as u64,
            limit: JUMBLED_EXHAUSTIVE_LIMIT as u64,
        });
    }
    let masks: Vec<u64> = (0..n as u32)
        .map(|v| g.adj(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut cur = 0u64;
    let mut inside = 0usize;
    let mut size = 0usize;
    let mut worst_slack = f64::INFINITY;
    let mut worst = (0u64, 0usize, 0usize);
    let total = 1u64 << n;
    for k in 0..total {
        if k > 0 {
            let v = k.trailing_zeros() as usize;
            let bit = 1u64 << v;
            if cur & bit == 0 {
                inside += (masks[v] & cur).count_ones() as usize;
                cur |= bit;
                size += 1;
            } else {
                cur &= !bit;
                size -= 1;
                inside -= (masks[v] & cur).count_ones() as usize;
            }
        }
        let (_, slack) = jumbled_slack(p, beta, size, inside);
        if slack < worst_slack {
            worst_slack = slack;
            worst = (cur, size, inside);
        }
    }
    let subset: Vec<u32> = (0..n as u32).filter(|&v| worst.0 >> v & 1 == 1).collect();
    let (expected, slack) = jumbled_slack(p, beta, worst.1, worst.2);
    Ok(JumbledScan {
        pass: worst_slack >= 0.0,
        worst: JumbledWitness { subset, edges_inside: worst.2, expected, slack },
        subsets_checked: total,
    })
}

/// Samples `trials` uniform subsets of uniform random sizes and checks
/// the jumbledness inequality on each. A violation is definitive; a pass
/// is only evidence. Deterministic per seed.
#[must_use]
pub fn is_jumbled_sampled(
    g: &Graph,
    p: f64,
    beta: f64,
    trials: usize,
    seed: u64,
) -> JumbledScan {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut member = vec![false; n];
    let mut worst_slack = f64::INFINITY;
    let mut worst: (Vec<u32>, usize, usize) = (Vec::new(), 0, 0);
    for _ in 0..trials {
        let size = rng.gen_range(0..=n);
        pool.partial_shuffle(&mut rng, size);
        let subset = &pool[..size];
        for &v in subset {
            member[v as usize] = true;
        }
        let mut inside = 0usize;
        for &v in subset {
            inside += g.adj(v).iter().filter(|&&w| w > v && member[w as usize]).count();
        }
        let (_, slack) = jumbled_slack(p, beta, size, inside);
        if slack < worst_slack {
            worst_slack = slack;
            worst = (subset.to_vec(), size, inside);
        }
        for &v in subset {
            member[v as usize] = false;
        }
    }
    let (mut subset, size, inside) = worst;
    subset.sort_unstable();
    let (expected, slack) = jumbled_slack(p, beta, size, inside);
    JumbledScan {
        pass: worst_slack >= 0.0,
        worst: JumbledWitness { subset, edges_inside: inside, expected, slack },
        subsets_checked: trials as u64,
    }
}

#[derive(Debug, Clone)]
pub struct ExpansionScan {
    pub pass: bool,
    /// A set with `|N(S) \ S| < d |S|`, if one was found.
    pub witness: Option<Vec<u32>>,
    pub sets_checked: u64,
    pub exhaustive: bool,
}

fn binomial_sum(n: usize, max_k: usize) -> u64 {
    let mut total = 0u64;
    let mut c = 1u128;
    for k in 1..=max_k.min(n) {
        c = c * (n - k + 1) as u128 / k as u128;
        total = total.saturating_add(c.min(u64::MAX as u128) as u64);
        if total >= u64::MAX / 2 {
            return u64::MAX;
        }
    }
    total
}

fn for_each_combination(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<u32> = (0..k as u32).collect();
    loop {
        f(&idx)?;
        // Advance to the next lexicographic combination.
        let mut i = k;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if idx[i] < (n - k + i) as u32 {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// External-neighborhood expansion: `|N(S) \ S| >= d |S|` for every
/// nonempty `S` with `|S| <= s`.
///
/// Exhaustive when the number of candidate sets fits the combination
/// budget; `Auto` falls back to sampling otherwise.
pub fn expansion_check(
    g: &Graph,
    s: usize,
    d: usize,
    mode: ScanMode,
) -> Result<ExpansionScan, CheckError> {
    let n = g.n();
    if s == 0 {
        return Err(CheckError::Invalid { what: "expansion_check", requirement: "s >= 1" });
    }
    let budget_ok = binomial_sum(n, s) <= COMBINATION_BUDGET;
    let mut member = vec![false; n];
    let mut seen = vec![false; n];
    let check = |set: &[u32], member: &mut [bool], seen: &mut [bool]| -> bool {
        for &v in set {
            member[v as usize] = true;
        }
        let mut outside = 0usize;
        for &v in set {
            for &w in g.adj(v) {
                if !member[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    outside += 1;
                }
            }
        }
        for &v in set {
            member[v as usize] = false;
            for &w in g.adj(v) {
                seen[w as usize] = false;
            }
        }
        outside >= d * set.len()
    };
    match mode {
        ScanMode::Exhaustive | ScanMode::Auto { .. } if budget_ok => {
            let mut checked = 0u64;
            let mut witness = None;
            for k in 1..=s.min(n) {
                let flow = for_each_combination(n, k, |set| {
                    checked += 1;
                    if check(set, &mut member, &mut seen) {
                        ControlFlow::Continue(())
                    } else {
                        witness = Some(set.to_vec());
                        ControlFlow::Break(())
                    }
                });
                if flow.is_break() {
                    break;
                }
            }
            Ok(ExpansionScan { pass: witness.is_none(), witness, sets_checked: checked, exhaustive: true })
        }
        ScanMode::Exhaustive => Err(CheckError::TooLarge {
            what: "expansion",
            got: binomial_sum(n, s),
            limit: COMBINATION_BUDGET,
        }),
        ScanMode::Sampled { .. } | ScanMode::Auto { .. } => {
            // Auto reaches here only over budget.
            let (trials, seed) = match mode {
                ScanMode::Sampled { trials, seed } => (trials, seed),
                ScanMode::Auto { seed } => (AUTO_TRIALS, seed),
                ScanMode::Exhaustive => unreachable!(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pool: Vec<u32> = (0..n as u32).collect();
            let mut witness = None;
            for _ in 0..trials {
                let k = rng.gen_range(1..=s.min(n).max(1));
                pool.partial_shuffle(&mut rng, k);
                let mut set = pool[..k].to_vec();
                set.sort_unstable();
                if !check(&set, &mut member, &mut seen) {
                    witness = Some(set);
                    break;
                }
            }
            Ok(ExpansionScan {
                pass: witness.is_none(),
                witness,
                sets_checked: trials as u64,
                exhaustive: false,
            })
        }
    }
}

#[derive(Debug, Clone)]
pub struct CutDensityScan {
    pub pass: bool,
    /// Most deficient bipartition seen: one side, crossing count, bound.
    pub witness: Option<(Vec<u32>, usize, f64)>,
    pub cuts_checked: u64,
    pub exhaustive: bool,
}

/// Bipartition density: `e(A, B) >= (1 - 6 eps) p |A| |B|` for every
/// nonempty bipartition. Exhaustive for n up to
/// [`CUT_EXHAUSTIVE_LIMIT`]; sampled mode adds all singleton cuts to the
/// random draws.
pub fn cut_density_check(
    g: &Graph,
    p: f64,
    eps: f64,
    mode: ScanMode,
) -> Result<CutDensityScan, CheckError> {
    let n = g.n();
    if n < 2 {
        return Ok(CutDensityScan { pass: true, witness: None, cuts_checked: 0, exhaustive: true });
    }
    let factor = (1.0 - 6.0 * eps) * p;
    let margin = |cross: usize, a: usize| cross as f64 - factor * (a as f64) * ((n - a) as f64);
    match mode {
        ScanMode::Exhaustive | ScanMode::Auto { .. } if n <= CUT_EXHAUSTIVE_LIMIT => {
            // Gray-code walk over sides A not containing vertex n-1.
            let mut side = vec![false; n];
            let mut cross = 0usize;
            let mut a = 0usize;
            let mut worst = f64::INFINITY;
            let mut worst_at: Option<(u64, usize)> = None;
            let steps = 1u64 << (n - 1);
            let mut mask = 0u64;
            for k in 1..steps {
                let v = k.trailing_zeros() as usize;
                let joined = !side[v];
                side[v] = joined;
                mask ^= 1 << v;
                let mut delta = 0isize;
                for &w in g.adj(v as u32) {
                    if side[w as usize] == joined {
                        delta -= 1;
                    } else {
                        delta += 1;
                    }
                }
                cross = (cross as isize + delta) as usize;
                a = if joined { a + 1 } else { a - 1 };
                if a == 0 {
                    continue;
                }
                let m = margin(cross, a);
                if m < worst {
                    worst = m;
                    worst_at = Some((mask, cross));
                }
            }
            let witness = worst_at.and_then(|(mask, cross)| {
                (worst < 0.0).then(|| {
                    let set: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                    let bound = factor * set.len() as f64 * (n - set.len()) as f64;
                    (set, cross, bound)
                })
            });
            Ok(CutDensityScan {
                pass: worst >= 0.0,
                witness,
                cuts_checked: steps - 1,
                exhaustive: true,
            })
        }
        ScanMode::Exhaustive => Err(CheckError::TooLarge {
            what: "cut density",
            got: n as u64,
            limit: CUT_EXHAUSTIVE_LIMIT as u64,
        }),
        ScanMode::Sampled { .. } | ScanMode::Auto { .. } => {
            let (trials, seed) = match mode {
                ScanMode::Sampled { trials, seed } => (trials, seed),
                ScanMode::Auto { seed } => (AUTO_TRIALS, seed),
                ScanMode::Exhaustive => unreachable!(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut worst = f64::INFINITY;
            let mut witness_raw: Option<(Vec<u32>, usize)> = None;
            let mut consider = |side: &[bool]| {
                let a = side.iter().filter(|&&x| x).count();
                if a == 0 || a == n {
                    return;
                }
                let cross = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| side[u as usize] != side[v as usize])
                    .count();
                let m = margin(cross, a);
                if m < worst {
                    worst = m;
                    let set = (0..n as u32).filter(|&v| side[v as usize]).collect();
                    witness_raw = Some((set, cross));
                }
            };
            let mut side = vec![false; n];
            for v in 0..n {
                side[v] = true;
                consider(&side);
                side[v] = false;
            }
            for _ in 0..trials {
                for x in side.iter_mut() {
                    *x = rng.gen::<bool>();
                }
                consider(&side);
            }
            let witness = witness_raw.and_then(|(set, cross)| {
                (worst < 0.0).then(|| {
                    let bound = factor * set.len() as f64 * (n - set.len()) as f64;
                    (set, cross, bound)
                })
            });
            Ok(CutDensityScan {
                pass: worst >= 0.0,
                witness,
                cuts_checked: (trials + n) as u64,
                exhaustive: false,
            })
        }
    }
}

/// Set size at which jumbledness forces an edge between disjoint sets:
/// `k = floor(4 beta / p) + 1`.
pub fn pair_edge_threshold(p: f64, beta: f64) -> Result<usize, CheckError> {
    if !(p > 0.0) || !p.is_finite() || !beta.is_finite() || beta < 0.0 {
        return Err(CheckError::Invalid {
            what: "pair_edge_threshold",
            requirement: "p > 0 and beta >= 0, both finite",
        });
    }
    Ok((4.0 * beta / p).floor() as usize + 1)
}

#[derive(Debug, Clone)]
pub struct PairEdgeScan {
    pub pass: bool,
    /// True when `2k > n`: no disjoint pair of k-sets exists.
    pub vacuous: bool,
    /// Disjoint k-sets with no crossing edge, if found.
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
    pub pairs_checked: u64,
}

/// Checks that every two disjoint k-sets of vertices have at least one
/// crossing edge.
pub fn pair_edge_check(
    g: &Graph,
    k: usize,
    mode: ScanMode,
) -> Result<PairEdgeScan, CheckError> {
    let n = g.n();
    if k == 0 {
        return Err(CheckError::Invalid { what: "pair_edge_check", requirement: "k >= 1" });
    }
    if 2 * k > n {
        return Ok(PairEdgeScan { pass: true, vacuous: true, witness: None, pairs_checked: 0 });
    }
    let mut in_a = vec![false; n];
    let crossing_exists = |a: &[u32], b: &[u32]| -> bool {
        b.iter().any(|&v| g.adj(v).iter().any(|w| a.binary_search(w).is_ok()))
    };
    let pair_budget = {
        let one_side = binomial_sum(n, k).saturating_sub(binomial_sum(n, k.saturating_sub(1)));
        one_side.saturating_mul(one_side)
    };
    match mode {
        ScanMode::Exhaustive | ScanMode::Auto { .. } if pair_budget <= COMBINATION_BUDGET => {
            let mut checked = 0u64;
            let mut witness = None;
            let _ = for_each_combination(n, k, |a| {
                for &v in a {
                    in_a[v as usize] = true;
                }
                let rest: Vec<u32> = (0..n as u32).filter(|&v| !in_a[v as usize]).collect();
                let flow = for_each_combination(rest.len(), k, |bidx| {
                    let b: Vec<u32> = bidx.iter().map(|&i| rest[i as usize]).collect();
                    checked += 1;
                    if crossing_exists(a, &b) {
                        ControlFlow::Continue(())
                    } else {
                        witness = Some((a.to_vec(), b));
                        ControlFlow::Break(())
                    }
                });
                for &v in a {
                    in_a[v as usize] = false;
                }
                flow
            });
            Ok(PairEdgeScan {
                pass: witness.is_none(),
                vacuous: false,
                witness,
                pairs_checked: checked,
            })
        }
        ScanMode::Exhaustive => Err(CheckError::TooLarge {
            what: "pair-edge",
            got: pair_budget,
            limit: COMBINATION_BUDGET,
        }),
        ScanMode::Sampled { .. } | ScanMode::Auto { .. } => {
            let (trials, seed) = match mode {
                ScanMode::Sampled { trials, seed } => (trials, seed),
                ScanMode::Auto { seed } => (AUTO_TRIALS, seed),
                ScanMode::Exhaustive => unreachable!(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pool: Vec<u32> = (0..n as u32).collect();
            let mut witness = None;
            for _ in 0..trials {
                pool.partial_shuffle(&mut rng, 2 * k);
                let mut a = pool[..k].to_vec();
                let mut b = pool[k..2 * k].to_vec();
                a.sort_unstable();
                b.sort_unstable();
                if !crossing_exists(&a, &b) {
                    witness = Some((a, b));
                    break;
                }
            }
            Ok(PairEdgeScan {
                pass: witness.is_none(),
                vacuous: false,
                witness,
                pairs_checked: trials as u64,
            })
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiameterScan {
    pub pass: bool,
    /// Violation: removed set, endpoints, and the distance found (None
    /// when unreachable).
    pub witness: Option<(Vec<u32>, u32, u32, Option<usize>)>,
    pub trials_checked: u64,
}

/// Robust small diameter of the subgraph `r`: after removing a random set
/// `S` with `|S| <= s_max`, random vertex pairs outside `S` must stay
/// within distance `path_len` in `r - S`. Deterministic per seed; fails
/// on the first violating sample.
#[must_use]
pub fn diameter_robustness_check(
    g: &Graph,
    r: &EdgeVector,
    s_max: usize,
    path_len: usize,
    trials: usize,
    seed: u64,
) -> DiameterScan {
    let n = g.n();
    let adj = g.subgraph_adj(r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut blocked = vec![false; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for trial in 0..trials {
        let s = rng.gen_range(0..=s_max.min(n.saturating_sub(2)));
        pool.partial_shuffle(&mut rng, s + 2);
        let removed = &pool[..s];
        let (x, y) = (pool[s], pool[s + 1]);
        for &v in removed {
            blocked[v as usize] = true;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[x as usize] = 0;
        queue.push_back(x);
        let mut found = None;
        'bfs: while let Some(v) = queue.pop_front() {
            if dist[v as usize] >= path_len {
                break;
            }
            for &w in &adj[v as usize] {
                if blocked[w as usize] || dist[w as usize] != usize::MAX {
                    continue;
                }
                dist[w as usize] = dist[v as usize] + 1;
                if w == y {
                    found = Some(dist[w as usize]);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        for &v in removed {
            blocked[v as usize] = false;
        }
        let ok = x == y || found.is_some_and(|d| d <= path_len);
        if !ok {
            let mut removed = removed.to_vec();
            removed.sort_unstable();
            return DiameterScan {
                pass: false,
                witness: Some((removed, x, y, found)),
                trials_checked: trial as u64 + 1,
            };
        }
    }
    DiameterScan { pass: true, witness: None, trials_checked: trials as u64 }
}

/// Where the jumbledness parameter `beta` comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BetaSource {
    Value(f64),
    /// `beta = 2 sqrt(n p)`, the binomial-graph regime.
    TwoSqrtNp,
    /// Estimate `beta` as the second adjacency eigenvalue. Certifies
    /// jumbledness only for regular graphs.
    Spectral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumbledMode {
    Exhaustive,
    Sampled,
    Spectral,
}

impl std::fmt::Display for JumbledMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            JumbledMode::Exhaustive => "exhaustive",
            JumbledMode::Sampled => "sampled",
            JumbledMode::Spectral => "spectral",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ReportConfig {
    pub eps: f64,
    pub jumbled_trials: usize,
    pub seed: u64,
    pub spectral: SpectralConfig,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            eps: 0.01,
            jumbled_trials: 10_000,
            seed: 0,
            spectral: SpectralConfig::default(),
        }
    }
}

/// Summary of all pseudorandomness checks on one graph.
#[derive(Debug, Clone)]
pub struct PseudorandomReport {
    pub p: f64,
    pub beta_bound: f64,
    pub min_degree: usize,
    pub jumbled_mode: JumbledMode,
    pub jumbled_pass: bool,
    pub expansion_s: usize,
    pub expansion_d: usize,
    pub expansion_pass: bool,
    pub cut_density_pass: bool,
    pub pair_k: usize,
    pub pair_pass: bool,
    pub lambda_estimate: Option<f64>,
}

impl PseudorandomReport {
    #[must_use]
    pub fn all_pass(&self) -> bool {
        self.jumbled_pass && self.expansion_pass && self.cut_density_pass && self.pair_pass
    }
}

impl std::fmt::Display for PseudorandomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "p: {}", self.p)?;
        writeln!(f, "beta_bound: {}", self.beta_bound)?;
        writeln!(f, "min_degree: {}", self.min_degree)?;
        writeln!(f, "jumbled_mode: {}", self.jumbled_mode)?;
        writeln!(f, "jumbled_pass: {}", self.jumbled_pass)?;
        writeln!(f, "expansion_s: {}", self.expansion_s)?;
        writeln!(f, "expansion_d: {}", self.expansion_d)?;
        writeln!(f, "expansion_pass: {}", self.expansion_pass)?;
        writeln!(f, "cut_density_pass: {}", self.cut_density_pass)?;
        writeln!(f, "pair_k: {}", self.pair_k)?;
        writeln!(f, "pair_pass: {}", self.pair_pass)?;
        match self.lambda_estimate {
            Some(l) => writeln!(f, "lambda_estimate: {l}"),
            None => writeln!(f, "lambda_estimate: none"),
        }
    }
}

/// Sparse-regime expansion parameters: `d = max(2, floor(ln ln n / 2))`,
/// `s = floor(n / 6d)`, clamped to at least 1.
#[must_use]
pub fn default_expansion_params(n: usize) -> (usize, usize) {
    let d = if n >= 3 {
        (((n as f64).ln().ln() / 2.0).floor() as usize).max(2)
    } else {
        2
    };
    let s = (n / (6 * d)).max(1);
    (s, d)
}

/// Runs every check with automatic mode selection and collects the
/// verdicts.
pub fn pseudorandomness_report(
    g: &Graph,
    p: f64,
    beta_source: BetaSource,
    cfg: &ReportConfig,
) -> Result<PseudorandomReport, CheckError> {
    let n = g.n();
    let mut lambda_estimate = None;
    let beta = match beta_source {
        BetaSource::Value(b) => b,
        BetaSource::TwoSqrtNp => 2.0 * (n as f64 * p).sqrt(),
        BetaSource::Spectral => {
            let est = spectral_beta(g, &cfg.spectral);
            lambda_estimate = Some(est.lambda);
            est.lambda
        }
    };

    let regular = (0..n as u32).all(|v| g.degree(v) == g.degree(0));
    let (jumbled_mode, jumbled_pass) = match beta_source {
        BetaSource::Spectral if regular && n >= 2 => {
            // An (n, d, lambda)-graph is (d/n, lambda)-jumbled; the
            // estimate itself is the certificate.
            (JumbledMode::Spectral, true)
        }
        _ => {
            if n <= JUMBLED_EXHAUSTIVE_LIMIT {
                let scan = is_jumbled_exhaustive(g, p, beta)?;
                (JumbledMode::Exhaustive, scan.pass)
            } else {
                let scan = is_jumbled_sampled(g, p, beta, cfg.jumbled_trials, cfg.seed);
                (JumbledMode::Sampled, scan.pass)
            }
        }
    };

    let (s, d) = default_expansion_params(n);
    let expansion = expansion_check(g, s, d, ScanMode::Auto { seed: cfg.seed })?;
    let cut = cut_density_check(g, p, cfg.eps, ScanMode::Auto { seed: cfg.seed })?;
    let pair_k = pair_edge_threshold(p, beta)?;
    let pair = pair_edge_check(g, pair_k, ScanMode::Auto { seed: cfg.seed })?;

    Ok(PseudorandomReport {
        p,
        beta_bound: beta,
        min_degree: g.min_degree(),
        jumbled_mode,
        jumbled_pass,
        expansion_s: s,
        expansion_d: d,
        expansion_pass: expansion.pass,
        cut_density_pass: cut.pass,
        pair_k,
        pair_pass: pair.pass,
        lambda_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, complete, gnp_generate, Graph};

    #[test]
    fn jumbled_exhaustive_complete_graph() {
        let scan = is_jumbled_exhaustive(&complete(5), 1.0, 1.0).unwrap();
        assert!(scan.pass);
        assert_eq!(scan.subsets_checked, 32);
    }

    #[test]
    fn jumbled_exhaustive_empty_graph_worst_witness_is_everything() {
        let g = Graph::new(6, []).unwrap();
        let scan = is_jumbled_exhaustive(&g, 0.5, 0.1).unwrap();
        assert!(!scan.pass);
        // Deviation grows quadratically, the allowance linearly, so the
        // worst subset is all six vertices.
        assert_eq!(scan.worst.subset, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(scan.worst.edges_inside, 0);
        assert!(scan.worst.slack < 0.0);
    }

    #[test]
    fn jumbled_exhaustive_refuses_large_n() {
        let g = gnp_generate(21, 0.5, 1);
        assert!(matches!(
            is_jumbled_exhaustive(&g, 0.5, 5.0),
            Err(CheckError::TooLarge { .. })
        ));
    }

    #[test]
    fn jumbled_exhaustive_matches_slow_oracle() {
        // Second implementation: recompute e(U) per subset from the edge
        // list, no incremental bookkeeping.
        let g = gnp_generate(12, 0.5, 7);
        let p = 0.5;
        let beta = 2.0 * (12.0f64 * p).sqrt();
        let scan = is_jumbled_exhaustive(&g, p, beta).unwrap();
        let mut oracle_worst = f64::INFINITY;
        let mut oracle_pass = true;
        for mask in 0u32..(1 << 12) {
            let size = mask.count_ones() as usize;
            let inside = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count();
            let expected = p * (size * size.saturating_sub(1)) as f64 / 2.0;
            let slack = beta * size as f64 - (inside as f64 - expected).abs();
            oracle_worst = oracle_worst.min(slack);
            oracle_pass &= slack >= 0.0;
        }
        assert_eq!(scan.pass, oracle_pass);
        assert!((scan.worst.slack - oracle_worst).abs() < 1e-9);
    }

    #[test]
    fn jumbled_sampled_is_deterministic_and_passes_generous_beta() {
        let g = gnp_generate(101, 0.3, 3);
        let beta = 2.0 * (101.0f64 * 0.3).sqrt();
        let a = is_jumbled_sampled(&g, 0.3, beta, 2_000, 11);
        let b = is_jumbled_sampled(&g, 0.3, beta, 2_000, 11);
        assert!(a.pass);
        assert_eq!(a.worst.subset, b.worst.subset);
        assert_eq!(a.worst.slack, b.worst.slack);
    }

    #[test]
    fn sampled_violations_are_sound() {
        // Any violation sampling finds must be a real violation the
        // exhaustive scan also finds.
        for seed in 0..50u64 {
            let n = 8 + (seed as usize % 7);
            let g = gnp_generate(n, 0.4, 900 + seed);
            let beta = 0.35 * (n as f64 * 0.4).sqrt();
            let ex = is_jumbled_exhaustive(&g, 0.4, beta).unwrap();
            let sa = is_jumbled_sampled(&g, 0.4, beta, 3_000, seed);
            if !sa.pass {
                assert!(!ex.pass, "sampled found a violation exhaustive denies (seed {seed})");
            }
            // The global worst can only be at least as bad as any sample.
            assert!(ex.worst.slack <= sa.worst.slack + 1e-9);
        }
    }

    #[test]
    fn expansion_examples() {
        let scan = expansion_check(&complete(5), 1, 4, ScanMode::Exhaustive).unwrap();
        assert!(scan.pass && scan.exhaustive);

        let c7 = circulant(7, &[1]).unwrap();
        let scan = expansion_check(&c7, 1, 3, ScanMode::Exhaustive).unwrap();
        assert!(!scan.pass);
        assert_eq!(scan.witness.as_ref().map(Vec::len), Some(1));
    }

    #[test]
    fn expansion_exhaustive_matches_slow_oracle() {
        let g = gnp_generate(14, 0.35, 21);
        let (s, d) = (3usize, 2usize);
        let scan = expansion_check(&g, s, d, ScanMode::Exhaustive).unwrap();
        // Slow oracle: materialize every subset via bitmask.
        let mut ok = true;
        for mask in 1u32..(1 << 14) {
            if (mask.count_ones() as usize) > s {
                continue;
            }
            let set: Vec<u32> = (0..14).filter(|&v| mask >> v & 1 == 1).collect();
            let mut outside = std::collections::BTreeSet::new();
            for &v in &set {
                for &w in g.adj(v) {
                    if mask >> w & 1 == 0 {
                        outside.insert(w);
                    }
                }
            }
            if outside.len() < d * set.len() {
                ok = false;
                break;
            }
        }
        assert_eq!(scan.pass, ok);
    }

    #[test]
    fn cut_density_complete_graph_passes() {
        let scan = cut_density_check(&complete(5), 1.0, 0.0, ScanMode::Exhaustive).unwrap();
        assert!(scan.pass);
        assert_eq!(scan.cuts_checked, 15);
    }

    #[test]
    fn cut_density_isolated_vertex_fails() {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for u in 0..5u32 {
            for v in u + 1..5 {
                pairs.push((u, v));
            }
        }
        let g = Graph::new(6, pairs).unwrap();
        let scan = cut_density_check(&g, 0.5, 0.0, ScanMode::Exhaustive).unwrap();
        assert!(!scan.pass);
        let (side, cross, bound) = scan.witness.unwrap();
        assert!((cross as f64) < bound);
        // Verify the witness violates by recomputation.
        let cross2 = g
            .edges()
            .iter()
            .filter(|&&(u, v)| side.contains(&u) != side.contains(&v))
            .count();
        assert_eq!(cross, cross2);
    }

    #[test]
    fn cut_density_exhaustive_matches_slow_oracle() {
        let g = gnp_generate(11, 0.5, 13);
        let (p, eps) = (0.5, 1.0 / 12.0);
        let scan = cut_density_check(&g, p, eps, ScanMode::Exhaustive).unwrap();
        let factor = (1.0 - 6.0 * eps) * p;
        let mut ok = true;
        for mask in 1u32..(1 << 10) {
            let a = mask.count_ones() as usize;
            let cross = g
                .edges()
                .iter()
                .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                .count();
            if (cross as f64) < factor * a as f64 * (11 - a) as f64 {
                ok = false;
            }
        }
        assert_eq!(scan.pass, ok);
    }

    #[test]
    fn pair_threshold_values() {
        assert_eq!(pair_edge_threshold(0.5, 1.0).unwrap(), 9);
        assert_eq!(pair_edge_threshold(0.4, 0.01).unwrap(), 1);
        let n = 100.0f64;
        let p = 0.5;
        let beta = 2.0 * (n * p).sqrt();
        assert_eq!(pair_edge_threshold(p, beta).unwrap(), 114);
        assert!(pair_edge_threshold(0.0, 1.0).is_err());
    }

    #[test]
    fn pair_threshold_monotonicity() {
        let mut prev = 0;
        for i in 1..=20 {
            let beta = i as f64 * 0.37;
            let k = pair_edge_threshold(0.3, beta).unwrap();
            assert!(k >= prev, "threshold must grow with beta");
            prev = k;
        }
        let mut prev = usize::MAX;
        for i in 1..=20 {
            let p = i as f64 * 0.05;
            let k = pair_edge_threshold(p, 2.0).unwrap();
            assert!(k <= prev, "threshold must shrink with p");
            prev = k;
        }
    }

    #[test]
    fn pair_check_examples() {
        let scan = pair_edge_check(&complete(5), 1, ScanMode::Exhaustive).unwrap();
        assert!(scan.pass && !scan.vacuous);

        // Two disjoint triangles: singleton pairs across components have
        // no edge.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let scan = pair_edge_check(&g, 1, ScanMode::Exhaustive).unwrap();
        assert!(!scan.pass);
        let (a, b) = scan.witness.unwrap();
        assert!(!g.has_edge(a[0], b[0]));

        let scan = pair_edge_check(&complete(5), 3, ScanMode::Exhaustive).unwrap();
        assert!(scan.vacuous && scan.pass);
    }

    #[test]
    fn diameter_robustness_examples() {
        let k9 = complete(9);
        let r = k9.full_vector();
        let scan = diameter_robustness_check(&k9, &r, 2, 2, 500, 3);
        assert!(scan.pass);

        // C9 minus one vertex is a path with far-apart endpoints.
        let c9 = circulant(9, &[1]).unwrap();
        let r = c9.full_vector();
        let scan = diameter_robustness_check(&c9, &r, 1, 3, 500, 3);
        assert!(!scan.pass);
        let (_, x, y, found) = scan.witness.unwrap();
        assert_ne!(x, y);
        assert!(found.is_none() || found.unwrap() > 3);
    }

    #[test]
    fn report_on_complete_graph() {
        let report =
            pseudorandomness_report(&complete(9), 1.0, BetaSource::Value(1.0), &ReportConfig::default())
                .unwrap();
        assert_eq!(report.min_degree, 8);
        assert_eq!(report.jumbled_mode, JumbledMode::Exhaustive);
        assert!(report.jumbled_pass);
        assert!(report.expansion_pass);
        assert!(report.cut_density_pass);
        assert!(report.pair_pass);
        assert!(report.all_pass());
        let text = report.to_string();
        assert!(text.contains("jumbled_mode: exhaustive"));
        assert!(text.contains("pair_pass: true"));
    }

    #[test]
    fn report_spectral_mode_on_regular_graph() {
        let g = circulant(9, &[1, 2]).unwrap();
        let report = pseudorandomness_report(
            &g,
            4.0 / 9.0,
            BetaSource::Spectral,
            &ReportConfig::default(),
        )
        .unwrap();
        assert_eq!(report.jumbled_mode, JumbledMode::Spectral);
        assert!(report.jumbled_pass);
        assert!(report.lambda_estimate.is_some());
    }
}
