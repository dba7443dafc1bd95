//! Obstruction certificates.
//!
//! While a family of Hamilton cycles has rank below the cycle space
//! dimension, some nonzero edge set `r` is orthogonal to every cycle in
//! the family yet outside the cut space. Such an `r` is a candidate
//! obstruction: if every Hamilton cycle of the graph met it evenly, the
//! Hamilton cycles could not span. [`next_candidate`] constructs one,
//! [`maximize_certificate`] lifts it to the heaviest member of its
//! coset modulo the cut space, and [`verify_certificate`] checks the
//! three obstruction properties:
//!
//! * C1: `r` is not the whole edge set.
//! * C2: every Hamilton cycle meets `r` in an even number of edges,
//!   confirmed by enumeration on small graphs and on sampled cycles
//!   otherwise.
//! * C3: `r` covers at least half of every bipartition cut, and is not
//!   itself the crossing set of any bipartition. The crossing sets are
//!   exactly the cut space members, so the second clause is a cut-space
//!   membership test.
//!
//! A certificate whose coset maximum was found exhaustively satisfies
//! the C3 inequality automatically: flipping `r` by a cut `(A, B)`
//! changes its weight by `e_G(A,B) - 2 e_r(A,B)`, which a maximum
//! forbids being positive.

use crate::edgespace::{
    coset_max_weight, cut_space_basis, CosetScan, EdgeSpaceError, EdgeVector, Gf2Basis,
};
use crate::graph::{Graph, CUT_EXHAUSTIVE_LIMIT};
use crate::hamilton::{
    find_hamilton_cycle, for_each_hamilton_cycle, SearchConfig,
};
use crate::seeds;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("spanned family contains a vector outside the cycle space")]
    SpannedOutsideCycleSpace,
    #[error("vector lies in the cut space, so it cannot obstruct")]
    InCutSpace,
    #[error("vector length {got} does not match edge count {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// How the even-intersection property C2 was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C2Status {
    /// Every Hamilton cycle was enumerated.
    Exhaustive { pass: bool },
    /// `checked` Hamilton cycles were tested; a pass is only evidence.
    OnSample { checked: usize, pass: bool },
    NotChecked,
}

impl C2Status {
    /// False only on a witnessed violation.
    #[must_use]
    pub fn holds(&self) -> bool {
        match *self {
            C2Status::Exhaustive { pass } | C2Status::OnSample { pass, .. } => pass,
            C2Status::NotChecked => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Initial,
    CosetMaximized,
    PipelineIteration(usize),
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub vector: EdgeVector,
    pub weight: usize,
    /// Whether the weight is the exact coset maximum.
    pub coset_exhaustive: bool,
    pub c2: C2Status,
    pub provenance: Provenance,
}

/// Wraps an edge set as a certificate candidate, rejecting cut space
/// members.
pub fn certificate_from(
    g: &Graph,
    vector: EdgeVector,
    provenance: Provenance,
) -> Result<Certificate, CertificateError> {
    if vector.len() != g.m() {
        return Err(CertificateError::LengthMismatch { expected: g.m(), got: vector.len() });
    }
    let cuts = cut_space_basis(g);
    if cuts.in_span(&vector) {
        return Err(CertificateError::InCutSpace);
    }
    let weight = vector.weight();
    Ok(Certificate { vector, weight, coset_exhaustive: false, c2: C2Status::NotChecked, provenance })
}

fn is_even_subgraph(g: &Graph, v: &EdgeVector) -> bool {
    let mut parity = vec![false; g.n()];
    for i in v.iter_ones() {
        let (a, b) = g.edge_at(i);
        parity[a as usize] ^= true;
        parity[b as usize] ^= true;
    }
    parity.iter().all(|&p| !p)
}

/// An edge set orthogonal to every vector in `spanned` but outside the
/// cut space, or `None` once `spanned` fills the cycle space.
///
/// `spanned` must hold cycle space members (checked via degree parity).
pub fn next_candidate(
    g: &Graph,
    spanned: &Gf2Basis,
) -> Result<Option<EdgeVector>, CertificateError> {
    if spanned.vectors().iter().any(|v| v.len() != g.m() || !is_even_subgraph(g, v)) {
        return Err(CertificateError::SpannedOutsideCycleSpace);
    }
    let cuts = cut_space_basis(g);
    Ok(next_candidate_with(g, spanned, &cuts))
}

/// [`next_candidate`] with the validation and the cut basis hoisted out;
/// the pipeline calls this once per iteration on vectors it built
/// itself.
pub(crate) fn next_candidate_with(
    g: &Graph,
    spanned: &Gf2Basis,
    cuts: &Gf2Basis,
) -> Option<EdgeVector> {
    let m = g.m();
    let cycle_dim = m + g.component_count() - g.n();
    if spanned.rank() >= cycle_dim {
        return None;
    }
    let pivots = spanned.pivots();
    let mut is_pivot = vec![false; m];
    for &p in pivots {
        is_pivot[p] = true;
    }
    // Kernel basis vector for free column f: bit f plus, for each basis
    // row set at f, that row's pivot bit. These are independent and span
    // the orthogonal complement, whose dimension exceeds the cut space's
    // while rank < cycle_dim, so some basis vector avoids the cut space.
    for f in (0..m).filter(|&f| !is_pivot[f]) {
        let mut k = EdgeVector::zeros(m);
        k.set(f, true);
        for (i, v) in spanned.vectors().iter().enumerate() {
            if v.get(f) {
                k.set(pivots[i], true);
            }
        }
        if !cuts.in_span(&k) {
            return Some(k);
        }
    }
    unreachable!("kernel of rank {} spanned set exceeds cut space dimension", spanned.rank());
}

/// Replaces the certificate by the heaviest member of its coset modulo
/// the cut space that the scan can find.
pub fn maximize_certificate(
    g: &Graph,
    cert: &Certificate,
    scan: CosetScan,
) -> Result<Certificate, EdgeSpaceError> {
    let max = coset_max_weight(g, &cert.vector, scan)?;
    Ok(Certificate {
        vector: max.vector,
        weight: max.weight,
        coset_exhaustive: max.exhaustive,
        c2: C2Status::NotChecked,
        provenance: Provenance::CosetMaximized,
    })
}

/// How to check C2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C2Mode {
    /// Enumerate below the vertex limit, sample above it.
    Auto,
    Enumerate { cap: usize },
    Sample { attempts: usize },
    Skip,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub c2: C2Mode,
    /// Largest n for C2 enumeration under `Auto`.
    pub c2_enumeration_limit: usize,
    pub c2_enumeration_cap: usize,
    pub c2_sample_attempts: usize,
    pub c3_trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            c2: C2Mode::Auto,
            c2_enumeration_limit: 11,
            c2_enumeration_cap: 200_000,
            c2_sample_attempts: 8,
            c3_trials: 10_000,
            seed: 0,
        }
    }
}

/// A bipartition where the certificate covers less than half of the
/// crossing edges.
#[derive(Debug, Clone)]
pub struct C3Witness {
    pub side: Vec<u32>,
    pub r_crossing: usize,
    pub g_crossing: usize,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// C1: the certificate is a proper subset of the edges.
    pub c1_proper: bool,
    pub c2: C2Status,
    /// C3 inequality over the scanned bipartitions.
    pub c3_cut_half: bool,
    pub c3_exhaustive: bool,
    /// C3 second clause: not the crossing set of any bipartition.
    pub c3_not_cut_induced: bool,
    pub c3_witness: Option<C3Witness>,
}

impl VerifyReport {
    /// No scanned property witnessed a violation.
    #[must_use]
    pub fn pass(&self) -> bool {
        self.c1_proper && self.c2.holds() && self.c3_cut_half && self.c3_not_cut_induced
    }
}

/// Checks C1, C2, and C3 for an edge set.
#[must_use]
pub fn verify_certificate(g: &Graph, r: &EdgeVector, cfg: &VerifyConfig) -> VerifyReport {
    assert_eq!(r.len(), g.m(), "vector from a different graph");
    let c1_proper = r.weight() < g.m();
    let c2 = check_c2(g, r, cfg);
    let (c3_cut_half, c3_exhaustive, c3_witness) = c3_scan(g, r, cfg.c3_trials, cfg.seed);
    let c3_not_cut_induced = !cut_space_basis(g).in_span(r);
    VerifyReport { c1_proper, c2, c3_cut_half, c3_exhaustive, c3_not_cut_induced, c3_witness }
}

fn check_c2(g: &Graph, r: &EdgeVector, cfg: &VerifyConfig) -> C2Status {
    let mode = match cfg.c2 {
        C2Mode::Auto => {
            if g.n() <= cfg.c2_enumeration_limit {
                C2Mode::Enumerate { cap: cfg.c2_enumeration_cap }
            } else {
                C2Mode::Sample { attempts: cfg.c2_sample_attempts }
            }
        }
        other => other,
    };
    match mode {
        C2Mode::Skip => C2Status::NotChecked,
        C2Mode::Enumerate { cap } => {
            let mut checked = 0usize;
            let mut pass = true;
            let complete = for_each_hamilton_cycle(g, &mut |c| {
                if checked == cap {
                    return ControlFlow::Break(());
                }
                checked += 1;
                let h = g.cycle_vector(c).expect("enumerated cycle");
                if h.dot(r) {
                    pass = false;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            if !pass {
                C2Status::OnSample { checked, pass: false }
            } else if complete {
                C2Status::Exhaustive { pass: true }
            } else {
                C2Status::OnSample { checked, pass: true }
            }
        }
        C2Mode::Sample { attempts } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seeds::derive(cfg.seed, seeds::stage::SAMPLING, 2));
            let mut checked = 0usize;
            for _ in 0..attempts {
                let search = SearchConfig { seed: rng.gen(), ..SearchConfig::default() };
                if let Some((c, _)) = find_hamilton_cycle(g, &search) {
                    checked += 1;
                    let h = g.cycle_vector(&c).expect("search returned a cycle");
                    if h.dot(r) {
                        return C2Status::OnSample { checked, pass: false };
                    }
                }
            }
            C2Status::OnSample { checked, pass: true }
        }
        C2Mode::Auto => unreachable!(),
    }
}

/// Scans bipartitions for `2 e_r(A,B) >= e_G(A,B)`. Exhaustive via a
/// Gray-code walk when n allows, otherwise sampled sides plus every
/// singleton.
fn c3_scan(
    g: &Graph,
    r: &EdgeVector,
    trials: usize,
    seed: u64,
) -> (bool, bool, Option<C3Witness>) {
    let n = g.n();
    if n < 2 {
        return (true, true, None);
    }
    // (neighbor, edge index) pairs per vertex, for incremental updates.
    let mut incident: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u as usize].push((v, i));
        incident[v as usize].push((u, i));
    }
    if n <= CUT_EXHAUSTIVE_LIMIT {
        let mut side = vec![false; n];
        let mut e_g = 0isize;
        let mut e_r = 0isize;
        let mut mask = 0u64;
        for k in 1u64..1 << (n - 1) {
            let v = k.trailing_zeros() as usize;
            let joined = !side[v];
            side[v] = joined;
            mask ^= 1 << v;
            for &(w, i) in &incident[v] {
                let delta = if side[w as usize] == joined { -1 } else { 1 };
                e_g += delta;
                if r.get(i) {
                    e_r += delta;
                }
            }
            if 2 * e_r < e_g {
                let set = (0..n as u32).filter(|&u| mask >> u & 1 == 1).collect();
                let witness =
                    C3Witness { side: set, r_crossing: e_r as usize, g_crossing: e_g as usize };
                return (false, true, Some(witness));
            }
        }
        (true, true, None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seeds::derive(seed, seeds::stage::SAMPLING, 3));
        let mut side = vec![false; n];
        let eval = |side: &[bool]| -> Option<C3Witness> {
            let mut e_g = 0usize;
            let mut e_r = 0usize;
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if side[u as usize] != side[v as usize] {
                    e_g += 1;
                    if r.get(i) {
                        e_r += 1;
                    }
                }
            }
            (2 * e_r < e_g).then(|| C3Witness {
                side: (0..n as u32).filter(|&u| side[u as usize]).collect(),
                r_crossing: e_r,
                g_crossing: e_g,
            })
        };
        for v in 0..n {
            side[v] = true;
            if let Some(w) = eval(&side) {
                return (false, false, Some(w));
            }
            side[v] = false;
        }
        for _ in 0..trials {
            for x in side.iter_mut() {
                *x = rng.gen::<bool>();
            }
            if let Some(w) = eval(&side) {
                return (false, false, Some(w));
            }
        }
        (true, false, None)
    }
}
