//! End-to-end construction of a Hamilton-cycle basis of the cycle space.
//!
//! The driver seeds a basis with one Hamilton cycle, then repeats: pick a
//! certificate orthogonal to everything spanned so far and outside the cut
//! space, push its weight to its coset maximum, and hunt a Hamilton cycle
//! meeting it oddly, directly at first and through a parity switcher when
//! luck runs out. Odd intersection with an orthogonal certificate forces
//! independence, so every accepted cycle grows the rank by one and the loop
//! ends at the cycle space dimension after at most that many rounds.
//!
//! Even orders stop before any search: a Hamilton cycle on an even order has
//! even weight, weight parity is linear, and a single odd cycle already puts
//! odd-weight vectors into the cycle space, so Hamilton cycles are stuck in
//! a proper subspace. On bipartite graphs that argument says nothing and the
//! outcome is reported as undetermined instead.

pub mod io;

pub use io::{
    parse_decomposition, read_decomposition, render_decomposition, write_decomposition,
    DecompositionError, DecompositionErrorKind,
};

use crate::certificate::{certificate_from, maximize_certificate, next_candidate, Provenance};
use crate::edgespace::{CosetScan, EdgeVector, Gf2Basis};
use crate::graph::Graph;
use crate::hamilton::{
    find_hamilton_cycle, for_each_hamilton_cycle, hamilton_path_between, is_hamilton_cycle,
    SearchConfig,
};
use crate::seeds;
use crate::switcher::{build_switcher, ConnectorStrategy, SwitcherConfig, SwitcherError};
use std::ops::ControlFlow;

/// Whether the run treats the graph as dense or sparse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Dense,
    Sparse,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Dense => "dense",
            Variant::Sparse => "sparse",
        })
    }
}

/// Variant selection: forced, or by minimum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariantChoice {
    #[default]
    Auto,
    Dense,
    Sparse,
}

/// Tuning for [`hamilton_basis`] and [`odd_intersection_hamilton`].
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub variant: VariantChoice,
    /// Density margin: minimum degree at least n/2 plus this resolves
    /// [`VariantChoice::Auto`] to dense, and the same margin feeds the
    /// switcher connector choice.
    pub c_const: usize,
    /// Radius bound override for switcher cores; the variant picks one
    /// otherwise.
    pub ell_override: Option<usize>,
    /// Switcher builds attempted per certificate.
    pub retries: usize,
    /// Whole-cycle attempts per certificate before switchers start.
    pub direct_attempts: usize,
    pub seed: u64,
    pub search: SearchConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            variant: VariantChoice::Auto,
            c_const: 5,
            ell_override: None,
            retries: 8,
            direct_attempts: 4,
            seed: 0,
            search: SearchConfig::default(),
        }
    }
}

/// Resolves the variant against the graph.
#[must_use]
pub fn resolve_variant(g: &Graph, cfg: &PipelineConfig) -> Variant {
    match cfg.variant {
        VariantChoice::Dense => Variant::Dense,
        VariantChoice::Sparse => Variant::Sparse,
        VariantChoice::Auto => {
            if 2 * g.min_degree() >= g.n() + 2 * cfg.c_const {
                Variant::Dense
            } else {
                Variant::Sparse
            }
        }
    }
}

/// Radius bound for switcher cores: a flat constant when dense, roughly the
/// diameter scale log n when sparse.
#[must_use]
pub fn variant_ell(variant: Variant, n: usize, ell_override: Option<usize>) -> usize {
    ell_override.unwrap_or(match variant {
        Variant::Dense => 10,
        Variant::Sparse => ((n as f64).ln().ceil() as usize).max(2),
    })
}

/// How one basis cycle was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    /// A plain Hamilton cycle search happened to meet the certificate oddly.
    Direct,
    /// A parity switcher fixed the intersection parity.
    Switcher,
}

impl std::fmt::Display for Via {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Via::Direct => "direct",
            Via::Switcher => "switcher",
        })
    }
}

/// Telemetry for one rank-growing round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationStats {
    pub certificate_weight: usize,
    pub cycle_len: usize,
    /// Vertices of the switcher, zero on a direct hit.
    pub switcher_size: usize,
    /// Failed switcher builds or closures before the accepted cycle.
    pub retries: usize,
    pub posa_rotations: u64,
    pub via: Via,
}

/// Search telemetry from [`odd_intersection_hamilton`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OddStats {
    pub switcher_size: usize,
    pub retries: usize,
    pub posa_rotations: u64,
    pub direct_attempts: usize,
    pub via: Option<Via>,
}

/// Terminal failure of [`odd_intersection_hamilton`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "no odd-intersection Hamilton cycle after {direct_attempts} direct and \
     {switcher_attempts} switcher attempts ({closure_failures} closures failed)"
)]
pub struct OddSearchFailure {
    pub direct_attempts: usize,
    pub switcher_attempts: usize,
    pub closure_failures: usize,
    pub last_switcher: Option<SwitcherError>,
}

/// Why the pipeline stopped without a basis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error("order {n} is below the smallest cycle")]
    TooSmall { n: usize },
    #[error(
        "order {n} is even and the graph has an odd cycle: Hamilton cycles keep even \
         weight while the cycle space holds odd-weight vectors, so they cannot span"
    )]
    ParityObstruction { n: usize, odd_cycle: Vec<u32> },
    #[error(
        "order {n} is even and the graph is bipartite: the weight-parity argument \
         does not apply and spanning is undetermined here"
    )]
    EvenUndetermined { n: usize },
    #[error("no Hamilton cycle found to seed the basis")]
    SeedCycleNotFound,
    #[error("certificate stage failed at rank {rank}: {detail}")]
    Certificate { rank: usize, detail: String },
    #[error("rank {rank}: {failure}")]
    OddIntersectionFailed { rank: usize, failure: OddSearchFailure },
}

/// A full-rank family of Hamilton cycles spanning the cycle space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonBasis {
    /// Vertex orders; the first is the seed cycle.
    pub cycles: Vec<Vec<u32>>,
    /// One entry per cycle after the seed.
    pub iterations: Vec<IterationStats>,
    pub variant: Variant,
    pub target_rank: usize,
    pub seed: u64,
}

impl HamiltonBasis {
    #[must_use]
    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    /// Total rotation count across all searches, a rough work measure.
    #[must_use]
    pub fn total_rotations(&self) -> u64 {
        self.iterations.iter().map(|s| s.posa_rotations).sum()
    }

    /// Total switcher and closure retries across all rounds.
    #[must_use]
    pub fn total_retries(&self) -> usize {
        self.iterations.iter().map(|s| s.retries).sum()
    }
}

/// An odd cycle of the graph, or None when bipartite. Two-colors each
/// component and folds the first conflicting edge into a cycle through the
/// coloring tree.
fn odd_cycle_witness(g: &Graph) -> Option<Vec<u32>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n as u32 {
        if color[root as usize] != u8::MAX {
            continue;
        }
        color[root as usize] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &t in g.adj(v) {
                if color[t as usize] == u8::MAX {
                    color[t as usize] = color[v as usize] ^ 1;
                    parent[t as usize] = v;
                    queue.push_back(t);
                } else if color[t as usize] == color[v as usize] {
                    // A same-color conflict joins two vertices of equal BFS
                    // depth, so climbing both in lockstep meets at the apex.
                    let mut left = vec![v];
                    let mut right = vec![t];
                    while left.last() != right.last() {
                        left.push(parent[*left.last().unwrap() as usize]);
                        right.push(parent[*right.last().unwrap() as usize]);
                    }
                    let mut cycle = left;
                    cycle.extend(right.iter().rev().skip(1).copied());
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Searches for a Hamilton cycle whose intersection with `r` has odd size:
/// a few plain attempts first, then parity switchers. `item` keys the
/// derived randomness so distinct rounds explore differently.
pub fn odd_intersection_hamilton(
    g: &Graph,
    r: &EdgeVector,
    cfg: &PipelineConfig,
    variant: Variant,
    item: u64,
) -> Result<(Vec<u32>, OddStats), OddSearchFailure> {
    let mut stats = OddStats::default();
    let odd_meet = |cycle: &[u32]| {
        g.cycle_vector(cycle).expect("search returns real cycles").dot(r)
    };
    for a in 0..cfg.direct_attempts {
        let mut sc = cfg.search.clone();
        sc.seed = seeds::derive(cfg.seed, seeds::stage::ODD_HAMILTON, (item << 8) | a as u64);
        stats.direct_attempts = a + 1;
        let Some((cycle, work)) = find_hamilton_cycle(g, &sc) else {
            break;
        };
        stats.posa_rotations += work;
        if odd_meet(&cycle) {
            stats.via = Some(Via::Direct);
            return Ok((cycle, stats));
        }
    }
    let ell = variant_ell(variant, g.n(), cfg.ell_override);
    let mut closure_failures = 0;
    let mut last_switcher = None;
    for t in 0..cfg.retries {
        stats.retries = t;
        let swcfg = SwitcherConfig {
            ell,
            connector: ConnectorStrategy::Auto,
            dense_margin: cfg.c_const,
            uw_offset: t,
            seed: seeds::derive(cfg.seed, seeds::stage::SWITCHER, (item << 8) | t as u64),
        };
        let sw = match build_switcher(g, r, &swcfg) {
            Ok(sw) => sw,
            Err(e) => {
                last_switcher = Some(e);
                continue;
            }
        };
        let (v1, vmid) = sw.endpoints();
        let interior = sw.interior();
        let mut sc = cfg.search.clone();
        sc.seed =
            seeds::derive(cfg.seed, seeds::stage::ODD_HAMILTON, (item << 8) | (128 + t as u64));
        let Some((closing, work)) = hamilton_path_between(g, vmid, v1, &interior, &sc) else {
            closure_failures += 1;
            continue;
        };
        stats.posa_rotations += work;
        for traversal in sw.hamilton_paths() {
            let mut cycle = traversal;
            cycle.extend_from_slice(&closing[1..closing.len() - 1]);
            if odd_meet(&cycle) {
                assert!(is_hamilton_cycle(g, &cycle), "switcher closure must stay a cycle");
                stats.via = Some(Via::Switcher);
                stats.switcher_size = sw.vertices().len();
                stats.retries = t;
                return Ok((cycle, stats));
            }
        }
        unreachable!("switcher traversals have opposite certificate parity");
    }
    Err(OddSearchFailure {
        direct_attempts: stats.direct_attempts,
        switcher_attempts: cfg.retries,
        closure_failures,
        last_switcher,
    })
}

/// Builds a Hamilton-cycle basis of the cycle space of `g`.
pub fn hamilton_basis(g: &Graph, cfg: &PipelineConfig) -> Result<HamiltonBasis, PipelineError> {
    let n = g.n();
    if n < 3 {
        return Err(PipelineError::TooSmall { n });
    }
    if n % 2 == 0 {
        return Err(match odd_cycle_witness(g) {
            Some(odd_cycle) => PipelineError::ParityObstruction { n, odd_cycle },
            None => PipelineError::EvenUndetermined { n },
        });
    }
    let variant = resolve_variant(g, cfg);
    let target_rank = g.m() + g.component_count() - n;
    let mut sc = cfg.search.clone();
    sc.seed = seeds::derive(cfg.seed, seeds::stage::SEED_CYCLE, 0);
    let Some((seed_cycle, _)) = find_hamilton_cycle(g, &sc) else {
        return Err(PipelineError::SeedCycleNotFound);
    };
    let mut spanned = Gf2Basis::new();
    spanned.insert(&g.cycle_vector(&seed_cycle).expect("search returns real cycles"));
    let mut cycles = vec![seed_cycle];
    let mut iterations = Vec::new();
    while spanned.rank() < target_rank {
        let round = cycles.len();
        let at_rank = spanned.rank();
        let stage_err = |detail: String| PipelineError::Certificate { rank: at_rank, detail };
        let candidate = next_candidate(g, &spanned)
            .map_err(|e| stage_err(e.to_string()))?
            .unwrap_or_else(|| unreachable!("a candidate exists below full rank"));
        let cert = certificate_from(g, candidate, Provenance::PipelineIteration(round))
            .map_err(|e| stage_err(e.to_string()))?;
        let scan = CosetScan::Auto {
            seed: seeds::derive(cfg.seed, seeds::stage::COSET, round as u64),
        };
        let cert = maximize_certificate(g, &cert, scan).map_err(|e| stage_err(e.to_string()))?;
        let (cycle, stats) = odd_intersection_hamilton(g, &cert.vector, cfg, variant, round as u64)
            .map_err(|failure| PipelineError::OddIntersectionFailed { rank: at_rank, failure })?;
        let grew = spanned.insert(&g.cycle_vector(&cycle).expect("search returns real cycles"));
        assert!(grew, "odd intersection with an orthogonal certificate forces independence");
        iterations.push(IterationStats {
            certificate_weight: cert.weight,
            cycle_len: cycle.len(),
            switcher_size: stats.switcher_size,
            retries: stats.retries,
            posa_rotations: stats.posa_rotations,
            via: stats.via.expect("successful search always sets a route"),
        });
        cycles.push(cycle);
    }
    Ok(HamiltonBasis { cycles, iterations, variant, target_rank, seed: cfg.seed })
}

/// Expresses `target` as a combination of the given cycles, by index.
/// Returns None when the target lies outside their span. The indices are a
/// valid combination even when the cycles are dependent, just not unique.
pub fn express_cycle(
    g: &Graph,
    cycles: &[Vec<u32>],
    target: &EdgeVector,
) -> Result<Option<Vec<usize>>, crate::graph::GraphError> {
    assert_eq!(target.len(), g.m(), "target vector length mismatch");
    let m = g.m();
    let k = cycles.len();
    // Tag each cycle with a private high bit; reduction then carries the
    // combination along for free.
    let widen = |v: &EdgeVector| {
        let mut w = EdgeVector::zeros(m + k);
        for i in v.iter_ones() {
            w.set(i, true);
        }
        w
    };
    let mut tagged = Gf2Basis::new();
    for (i, cyc) in cycles.iter().enumerate() {
        let mut w = widen(&g.cycle_vector(cyc)?);
        w.set(m + i, true);
        tagged.insert(&w);
    }
    let residue = tagged.reduce(&widen(target));
    if residue.iter_ones().any(|i| i < m) {
        return Ok(None);
    }
    Ok(Some(residue.iter_ones().map(|i| i - m).collect()))
}

/// Checks by enumeration whether Hamilton cycles span the whole cycle space,
/// stopping as soon as the accumulated rank hits the dimension.
#[must_use]
pub fn hamilton_cycles_span_bruteforce(g: &Graph) -> bool {
    let target = g.m() + g.component_count() - g.n();
    if target == 0 {
        return true;
    }
    let mut spanned = Gf2Basis::new();
    let complete = for_each_hamilton_cycle(g, &mut |cycle| {
        spanned.insert(&g.cycle_vector(cycle).expect("enumerated cycles are real"));
        if spanned.rank() == target {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    !complete || spanned.rank() == target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, complete, gnp_generate, Graph};

    #[test]
    fn seven_cycle_basis_is_the_cycle_itself() {
        let g = circulant(7, &[1]).unwrap();
        let b = hamilton_basis(&g, &PipelineConfig::default()).unwrap();
        assert_eq!(b.target_rank, 1);
        assert_eq!(b.cycles.len(), 1);
        assert!(b.iterations.is_empty());
        assert!(is_hamilton_cycle(&g, &b.cycles[0]));
    }

    #[test]
    fn complete_five_reaches_full_rank() {
        let g = complete(5);
        let b = hamilton_basis(&g, &PipelineConfig::default()).unwrap();
        assert_eq!(b.target_rank, 6);
        assert_eq!(b.cycles.len(), 6);
        let mut check = Gf2Basis::new();
        for c in &b.cycles {
            assert!(is_hamilton_cycle(&g, c));
            assert!(check.insert(&g.cycle_vector(c).unwrap()), "cycles must be independent");
        }
        assert_eq!(b.iterations.len(), 5);
    }

    #[test]
    fn even_order_with_odd_cycle_is_an_obstruction() {
        let g = complete(4);
        match hamilton_basis(&g, &PipelineConfig::default()) {
            Err(PipelineError::ParityObstruction { n: 4, odd_cycle }) => {
                assert!(odd_cycle.len() % 2 == 1 && odd_cycle.len() >= 3);
                assert!(g.cycle_vector(&odd_cycle).is_ok(), "witness must be a real cycle");
            }
            other => panic!("expected a parity obstruction, got {other:?}"),
        }
    }

    #[test]
    fn even_order_bipartite_is_undetermined() {
        let g = circulant(6, &[1]).unwrap();
        assert_eq!(
            hamilton_basis(&g, &PipelineConfig::default()),
            Err(PipelineError::EvenUndetermined { n: 6 })
        );
    }

    #[test]
    fn star_graph_has_no_seed_cycle() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            hamilton_basis(&g, &PipelineConfig::default()),
            Err(PipelineError::SeedCycleNotFound)
        );
    }

    #[test]
    fn squared_nine_cycle_reaches_full_rank() {
        let g = circulant(9, &[1, 2]).unwrap();
        let b = hamilton_basis(&g, &PipelineConfig::default()).unwrap();
        assert_eq!(b.variant, Variant::Sparse);
        assert_eq!(b.target_rank, 10);
        assert_eq!(b.cycles.len(), 10);
        let mut check = Gf2Basis::new();
        for c in &b.cycles {
            assert!(is_hamilton_cycle(&g, c));
            assert!(check.insert(&g.cycle_vector(c).unwrap()));
        }
    }

    #[test]
    fn express_recovers_a_triangle_and_rejects_a_single_edge() {
        let g = complete(5);
        let b = hamilton_basis(&g, &PipelineConfig::default()).unwrap();
        let triangle = g.cycle_vector(&[0, 1, 2]).unwrap();
        let combo = express_cycle(&g, &b.cycles, &triangle).unwrap().unwrap();
        let mut acc = g.zero_vector();
        for &i in &combo {
            acc.xor_assign(&g.cycle_vector(&b.cycles[i]).unwrap());
        }
        assert_eq!(acc, triangle);
        let mut lone = g.zero_vector();
        lone.set(0, true);
        assert_eq!(express_cycle(&g, &b.cycles, &lone).unwrap(), None);
    }

    #[test]
    fn bruteforce_span_verdicts() {
        assert!(hamilton_cycles_span_bruteforce(&complete(5)));
        assert!(!hamilton_cycles_span_bruteforce(&complete(4)));
        assert!(hamilton_cycles_span_bruteforce(&circulant(9, &[1, 2]).unwrap()));
    }

    #[test]
    fn odd_cycle_witness_matches_bipartiteness() {
        assert_eq!(odd_cycle_witness(&circulant(6, &[1]).unwrap()), None);
        assert_eq!(odd_cycle_witness(&circulant(8, &[1]).unwrap()), None);
        for g in [complete(4), crate::graph::petersen(), circulant(9, &[1, 2]).unwrap()] {
            let c = odd_cycle_witness(&g).unwrap();
            assert!(c.len() % 2 == 1 && c.len() >= 3);
            assert!(g.cycle_vector(&c).is_ok());
        }
    }

    #[test]
    fn random_odd_graphs_agree_with_bruteforce() {
        for (n, seed) in [(7usize, 11u64), (9, 12), (9, 13), (11, 14)] {
            let g = gnp_generate(n, 0.7, seed);
            let cfg = PipelineConfig::default();
            if let Ok(b) = hamilton_basis(&g, &cfg) {
                assert_eq!(b.cycles.len(), b.target_rank);
                assert!(hamilton_cycles_span_bruteforce(&g));
            }
        }
    }

    #[test]
    fn odd_intersection_search_reports_failure_on_hopeless_input() {
        // A lone 7-cycle: its only Hamilton cycle is the cycle itself, which
        // meets this even-weight certificate evenly.
        let g = circulant(7, &[1]).unwrap();
        let mut r = g.zero_vector();
        r.set(0, true);
        r.set(1, true);
        let cfg = PipelineConfig::default();
        let out = odd_intersection_hamilton(&g, &r, &cfg, Variant::Sparse, 1);
        assert!(out.is_err());
    }
}
