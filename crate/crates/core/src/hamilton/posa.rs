//! Rotation-extension search for Hamilton paths with both endpoints
//! fixed.
//!
//! The path grows from `x` inside the live vertex set with `y` held
//! back; rotations keep `x` fixed and move the other end. Once the path
//! covers every live vertex except `y`, it completes as soon as its end
//! is adjacent to `y`. Stalls trigger a restart from scratch under one
//! shared rotation budget.

use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct PosaConfig {
    pub max_rotations: u64,
    /// Rotations without a length record before restarting; 0 picks
    /// `100 * n`.
    pub restart_after: u64,
}

impl Default for PosaConfig {
    fn default() -> Self {
        PosaConfig { max_rotations: 500_000, restart_after: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSearch {
    Found { path: Vec<u32>, rotations: u64 },
    /// Budget ran out. Proves nothing about existence.
    Stalled { rotations: u64 },
    /// The live vertex set is not connected, so no path can exist.
    Disconnected,
}

const ABSENT: usize = usize::MAX;

/// Seeded search for a path from `x` to `y` through every vertex not in
/// `avoid`. Identical arguments replay identically.
#[must_use]
pub fn posa_hamilton_path(
    g: &Graph,
    x: u32,
    y: u32,
    avoid: &[u32],
    seed: u64,
    cfg: &PosaConfig,
) -> PathSearch {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &v in avoid {
        blocked[v as usize] = true;
    }
    assert!(!blocked[x as usize] && !blocked[y as usize], "endpoint in avoid set");
    assert_ne!(x, y, "distinct endpoints required");
    let live = n - avoid.len();

    // Reachability over live vertices; x and y must see everything.
    let mut reach = vec![false; n];
    reach[x as usize] = true;
    let mut stack = vec![x];
    let mut seen = 1usize;
    while let Some(v) = stack.pop() {
        for &w in g.adj(v) {
            if !blocked[w as usize] && !reach[w as usize] {
                reach[w as usize] = true;
                seen += 1;
                stack.push(w);
            }
        }
    }
    if seen != live {
        return PathSearch::Disconnected;
    }

    let target = live - 1;
    let restart_after = if cfg.restart_after == 0 { 100 * n as u64 } else { cfg.restart_after };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // y is invisible while the path grows.
    blocked[y as usize] = true;

    let mut pos = vec![ABSENT; n];
    let mut path: Vec<u32> = Vec::with_capacity(live);
    let mut rotations = 0u64;
    let mut best_len = 0usize;
    let mut stall = 0u64;
    let mut scratch: Vec<u32> = Vec::new();

    let reset = |path: &mut Vec<u32>, pos: &mut Vec<usize>| {
        for &v in path.iter() {
            pos[v as usize] = ABSENT;
        }
        path.clear();
        path.push(x);
        pos[x as usize] = 0;
    };
    reset(&mut path, &mut pos);

    loop {
        let end = *path.last().unwrap();
        if path.len() == target && g.has_edge(end, y) {
            path.push(y);
            return PathSearch::Found { path, rotations };
        }
        if rotations >= cfg.max_rotations {
            return PathSearch::Stalled { rotations };
        }

        scratch.clear();
        scratch.extend(
            g.adj(end)
                .iter()
                .copied()
                .filter(|&w| !blocked[w as usize] && pos[w as usize] == ABSENT),
        );
        if let Some(&w) = pick(&mut rng, &scratch) {
            path.push(w);
            pos[w as usize] = path.len() - 1;
            if path.len() > best_len {
                best_len = path.len();
                stall = 0;
            }
            continue;
        }

        // No extension: rotate around a path neighbor of the end. The
        // predecessor is excluded since that rotation is the identity.
        scratch.clear();
        scratch.extend(
            g.adj(end)
                .iter()
                .copied()
                .filter(|&w| pos[w as usize] != ABSENT && pos[w as usize] + 2 < path.len()),
        );
        rotations += 1;
        stall += 1;
        match pick(&mut rng, &scratch) {
            Some(&w) => {
                let s = pos[w as usize] + 1;
                path[s..].reverse();
                for (i, &v) in path.iter().enumerate().skip(s) {
                    pos[v as usize] = i;
                }
            }
            // Dead end, typically a degree-1 path end.
            None => reset(&mut path, &mut pos),
        }
        if stall > restart_after {
            stall = 0;
            best_len = path.len();
            reset(&mut path, &mut pos);
        }
    }
}

fn pick<'a>(rng: &mut ChaCha8Rng, from: &'a [u32]) -> Option<&'a u32> {
    match from.len() {
        0 => None,
        1 => Some(&from[0]),
        k => Some(&from[rng.gen_range(0..k)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, complete, gnp_generate, Graph};
    use crate::hamilton::is_simple_path;

    fn assert_spanning_path(g: &Graph, p: &[u32], x: u32, y: u32, avoid: &[u32]) {
        assert!(is_simple_path(g, p));
        assert_eq!(p.len(), g.n() - avoid.len());
        assert_eq!((p[0], *p.last().unwrap()), (x, y));
        assert!(avoid.iter().all(|v| !p.contains(v)));
    }

    #[test]
    fn complete_graph_any_endpoints() {
        let g = complete(10);
        for (x, y) in [(0, 5), (3, 4), (9, 0)] {
            match posa_hamilton_path(&g, x, y, &[], 1, &PosaConfig::default()) {
                PathSearch::Found { path, .. } => assert_spanning_path(&g, &path, x, y, &[]),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn random_graph_with_avoid() {
        let g = gnp_generate(80, 0.3, 17);
        let avoid = [3, 41, 77];
        match posa_hamilton_path(&g, 10, 60, &avoid, 2, &PosaConfig::default()) {
            PathSearch::Found { path, rotations } => {
                assert_spanning_path(&g, &path, 10, 60, &avoid);
                assert!(rotations < PosaConfig::default().max_rotations);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn impossible_endpoints_stall_within_budget() {
        // C5 has no Hamilton path between vertices at distance two.
        let c5 = circulant(5, &[1]).unwrap();
        let cfg = PosaConfig { max_rotations: 2_000, restart_after: 0 };
        assert_eq!(
            posa_hamilton_path(&c5, 0, 2, &[], 3, &cfg),
            PathSearch::Stalled { rotations: 2_000 }
        );
    }

    #[test]
    fn split_graph_is_detected() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            posa_hamilton_path(&g, 0, 4, &[], 1, &PosaConfig::default()),
            PathSearch::Disconnected
        );
        // Removing the far triangle leaves a connected live set.
        match posa_hamilton_path(&g, 0, 2, &[3, 4, 5], 1, &PosaConfig::default()) {
            PathSearch::Found { path, .. } => assert_spanning_path(&g, &path, 0, 2, &[3, 4, 5]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = gnp_generate(60, 0.25, 5);
        let a = posa_hamilton_path(&g, 0, 59, &[], 42, &PosaConfig::default());
        let b = posa_hamilton_path(&g, 0, 59, &[], 42, &PosaConfig::default());
        assert_eq!(a, b);
    }
}
