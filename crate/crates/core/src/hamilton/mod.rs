//! Hamilton path and cycle search.
//!
//! Three engines with different contracts:
//!
//! * [`enumerate_hamilton_cycles`] visits every Hamilton cycle in
//!   canonical form; feasible only for small graphs.
//! * [`backtrack_hamilton_path`] and [`backtrack_hamilton_cycle`] run an
//!   exhaustive depth-first search under a node budget. Exhausting the
//!   search space without the budget running out proves nonexistence.
//! * [`posa_hamilton_path`] is seeded rotation-extension: fast on dense
//!   or pseudorandom graphs, but a failure proves nothing.
//!
//! [`find_hamilton_cycle`] and [`hamilton_path_between`] pick an engine
//! by live vertex count.

mod backtrack;
mod enumerate;
mod posa;

pub use backtrack::{backtrack_hamilton_cycle, backtrack_hamilton_path, SearchOutcome};
pub use enumerate::{enumerate_hamilton_cycles, for_each_hamilton_cycle, Enumeration};
pub use posa::{posa_hamilton_path, PathSearch, PosaConfig};

use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Knobs for the engine-dispatching searches.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    /// Live vertex counts up to this use exhaustive backtracking.
    pub backtrack_limit: usize,
    pub backtrack_budget: u64,
    /// Base edges tried before [`find_hamilton_cycle`] gives up.
    pub base_edge_attempts: usize,
    pub posa: PosaConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            backtrack_limit: 20,
            backtrack_budget: 2_000_000,
            base_edge_attempts: 4,
            posa: PosaConfig::default(),
        }
    }
}

/// Nonempty, vertices distinct, consecutive vertices adjacent.
#[must_use]
pub fn is_simple_path(g: &Graph, path: &[u32]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v as usize >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[must_use]
pub fn is_hamilton_path(g: &Graph, path: &[u32]) -> bool {
    path.len() == g.n() && is_simple_path(g, path)
}

/// A Hamilton cycle given as its vertex sequence; the closing edge from
/// last back to first is implicit.
#[must_use]
pub fn is_hamilton_cycle(g: &Graph, cycle: &[u32]) -> bool {
    cycle.len() == g.n()
        && cycle.len() >= 3
        && is_simple_path(g, cycle)
        && g.has_edge(cycle[cycle.len() - 1], cycle[0])
}

/// Finds a Hamilton cycle, reported as its vertex sequence, along with
/// the rotation count spent. `None` is a search failure, not a proof of
/// nonexistence, except on graphs that fail the degree or connectivity
/// prechecks or fall under the backtracking limit.
#[must_use]
pub fn find_hamilton_cycle(g: &Graph, cfg: &SearchConfig) -> Option<(Vec<u32>, u64)> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    if n <= cfg.backtrack_limit {
        return match backtrack_hamilton_cycle(g, cfg.backtrack_budget) {
            SearchOutcome::Found(c) => Some((c, 0)),
            _ => None,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut total = 0u64;
    for _ in 0..cfg.base_edge_attempts {
        // A Hamilton path between the ends of an edge closes to a cycle.
        let (u, v) = g.edges()[rng.gen_range(0..g.m())];
        match posa_hamilton_path(g, u, v, &[], rng.gen(), &cfg.posa) {
            PathSearch::Found { path, rotations } => return Some((path, total + rotations)),
            PathSearch::Stalled { rotations } => total += rotations,
            PathSearch::Disconnected => return None,
        }
    }
    None
}

/// Finds a path from `x` to `y` through every vertex not in `avoid`.
/// Returns the path and the rotation count spent. Engine choice and
/// failure semantics as in [`find_hamilton_cycle`].
#[must_use]
pub fn hamilton_path_between(
    g: &Graph,
    x: u32,
    y: u32,
    avoid: &[u32],
    cfg: &SearchConfig,
) -> Option<(Vec<u32>, u64)> {
    let live = g.n() - avoid.len();
    if avoid.contains(&x) || avoid.contains(&y) {
        return None;
    }
    if x == y {
        return (live == 1).then(|| (vec![x], 0));
    }
    if live <= cfg.backtrack_limit {
        return match backtrack_hamilton_path(g, x, Some(y), avoid, cfg.backtrack_budget) {
            SearchOutcome::Found(p) => Some((p, 0)),
            _ => None,
        };
    }
    match posa_hamilton_path(g, x, y, avoid, cfg.seed, &cfg.posa) {
        PathSearch::Found { path, rotations } => Some((path, rotations)),
        _ => None,
    }
}
