//! Connector paths between cycle vertices, avoiding vertices already used.
//!
//! Three strategies cover the density range. Dense graphs get distance-two
//! connectors: a direct edge when present, otherwise the smallest free common
//! neighbor. Mid-range graphs get a plain shortest path under a length cap.
//! Sparse graphs get a two-sided tree growth that meets in the middle, guarded
//! by a sampled check that enough free degree remains to bother searching.

use crate::graph::Graph;
use crate::seeds;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How connector paths are grown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorStrategy {
    /// Pick by density: high minimum degree takes `Distance2`, anything else
    /// a bounded shortest path.
    Auto,
    /// Direct edge or one free common neighbor.
    Distance2,
    /// Shortest path through free vertices, at most `cap` edges.
    BfsGreedy { cap: usize },
    /// Two trees grown from both ends meeting in the middle, at most `cap`
    /// edges in the joined path, preceded by a sampled free-degree check
    /// over `samples` vertices.
    TreeEmbed { samples: usize, cap: usize },
}

impl ConnectorStrategy {
    /// Resolves `Auto` against the graph; other variants pass through.
    #[must_use]
    pub fn resolve(self, g: &Graph, ell: usize, dense_margin: usize) -> ConnectorStrategy {
        match self {
            ConnectorStrategy::Auto => {
                if 2 * g.min_degree() >= g.n() + 2 * dense_margin {
                    ConnectorStrategy::Distance2
                } else {
                    ConnectorStrategy::BfsGreedy { cap: ell.max(2) }
                }
            }
            other => other,
        }
    }
}

/// Mean number of free neighbors over sampled free vertices. Gauges whether
/// a depleted graph still has room for disjoint connectors.
pub fn connector_goodness(g: &Graph, used: &[bool], samples: usize, seed: u64) -> f64 {
    let free: Vec<u32> = (0..g.n() as u32).filter(|&v| !used[v as usize]).collect();
    if free.is_empty() || samples == 0 {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0usize;
    for _ in 0..samples {
        let v = free[rng.gen_range(0..free.len())];
        total += g.adj(v).iter().filter(|&&t| !used[t as usize]).count();
    }
    total as f64 / samples as f64
}

/// Connects `a` to `b` while treating `used` vertices as off-limits except
/// at the endpoints. `part` distinguishes connectors of one switcher so each
/// gets its own derived randomness.
pub(super) fn connect(
    g: &Graph,
    used: &[bool],
    a: u32,
    b: u32,
    strategy: &ConnectorStrategy,
    seed: u64,
    part: u64,
) -> Option<Vec<u32>> {
    match *strategy {
        ConnectorStrategy::Auto => unreachable!("resolved by the caller"),
        ConnectorStrategy::Distance2 => {
            if g.has_edge(a, b) {
                return Some(vec![a, b]);
            }
            let common = intersect_sorted(g.adj(a), g.adj(b))
                .into_iter()
                .find(|&c| !used[c as usize])?;
            Some(vec![a, common, b])
        }
        ConnectorStrategy::BfsGreedy { cap } => bfs_free_path(g, used, a, b, cap),
        ConnectorStrategy::TreeEmbed { samples, cap } => {
            let goodness =
                connector_goodness(g, used, samples, seeds::derive(seed, seeds::stage::SWITCHER, part));
            if goodness < 2.0 {
                return None;
            }
            meet_in_middle(g, used, a, b, cap)
        }
    }
}

fn intersect_sorted(xs: &[u32], ys: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(xs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn bfs_free_path(g: &Graph, used: &[bool], a: u32, b: u32, cap: usize) -> Option<Vec<u32>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut pred = vec![u32::MAX; n];
    dist[a as usize] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(a);
    while let Some(v) = queue.pop_front() {
        if v == b || dist[v as usize] == cap {
            continue;
        }
        for &t in g.adj(v) {
            if dist[t as usize] != usize::MAX || (used[t as usize] && t != b) {
                continue;
            }
            dist[t as usize] = dist[v as usize] + 1;
            pred[t as usize] = v;
            queue.push_back(t);
        }
    }
    if dist[b as usize] > cap {
        return None;
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(pred[*path.last().unwrap() as usize]);
    }
    path.reverse();
    Some(path)
}

/// Alternating breadth-first growth from both endpoints through free
/// vertices; the first contact between the trees fixes the path.
fn meet_in_middle(g: &Graph, used: &[bool], a: u32, b: u32, cap: usize) -> Option<Vec<u32>> {
    if g.has_edge(a, b) && cap >= 1 {
        return Some(vec![a, b]);
    }
    let n = g.n();
    // side: 0 = unseen, 1 = tree of a, 2 = tree of b.
    let mut side = vec![0u8; n];
    let mut pred = vec![u32::MAX; n];
    side[a as usize] = 1;
    side[b as usize] = 2;
    let mut fronts = [vec![a], vec![b]];
    let mut levels = [0usize; 2];
    // Frontier contacts join through one edge, so once the frontier depths
    // alone pass the cap no later contact can fit.
    while levels[0] + levels[1] + 1 <= cap {
        let turn = if fronts[0].is_empty() && fronts[1].is_empty() {
            return None;
        } else if fronts[1].is_empty() || (!fronts[0].is_empty() && levels[0] <= levels[1]) {
            0
        } else {
            1
        };
        let mark = turn as u8 + 1;
        let mut next = Vec::new();
        for &v in &fronts[turn] {
            for &t in g.adj(v) {
                if side[t as usize] == mark {
                    continue;
                }
                if side[t as usize] != 0 {
                    // Contact: splice v .. a and t .. b together.
                    let joined = splice(&pred, v, t, turn == 1);
                    if joined.len() - 1 <= cap {
                        return Some(joined);
                    }
                    continue;
                }
                if used[t as usize] {
                    continue;
                }
                side[t as usize] = mark;
                pred[t as usize] = v;
                next.push(t);
            }
        }
        fronts[turn] = next;
        levels[turn] += 1;
    }
    None
}

/// Chains predecessor links from both contact vertices into one a-to-b path.
/// `flipped` says the contact edge ran from the b-side tree.
fn splice(pred: &[u32], v: u32, t: u32, flipped: bool) -> Vec<u32> {
    let walk_back = |from: u32| {
        let mut part = vec![from];
        while pred[*part.last().unwrap() as usize] != u32::MAX {
            part.push(pred[*part.last().unwrap() as usize]);
        }
        part
    };
    let (to_a_end, to_b_end) = if flipped { (t, v) } else { (v, t) };
    let mut left = walk_back(to_a_end);
    left.reverse();
    left.extend(walk_back(to_b_end));
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, complete, gnp_generate};

    #[test]
    fn distance_two_prefers_the_direct_edge() {
        let g = complete(6);
        let used = vec![false; 6];
        let p = connect(&g, &used, 0, 3, &ConnectorStrategy::Distance2, 0, 2).unwrap();
        assert_eq!(p, vec![0, 3]);
    }

    #[test]
    fn distance_two_takes_the_smallest_free_common_neighbor() {
        // 5-cycle with strides {1}: vertices 0 and 2 share only neighbor 1.
        let g = circulant(5, &[1]).unwrap();
        let mut used = vec![false; 5];
        let p = connect(&g, &used, 0, 2, &ConnectorStrategy::Distance2, 0, 2).unwrap();
        assert_eq!(p, vec![0, 1, 2]);
        used[1] = true;
        assert!(connect(&g, &used, 0, 2, &ConnectorStrategy::Distance2, 0, 2).is_none());
    }

    #[test]
    fn bfs_path_respects_the_cap_and_blocked_vertices() {
        let g = circulant(8, &[1]).unwrap();
        let used = vec![false; 8];
        let p = connect(&g, &used, 0, 3, &ConnectorStrategy::BfsGreedy { cap: 3 }, 0, 2).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3]);
        assert!(connect(&g, &used, 0, 4, &ConnectorStrategy::BfsGreedy { cap: 3 }, 0, 2).is_none());
        let mut blocked = vec![false; 8];
        blocked[1] = true;
        let around =
            connect(&g, &blocked, 0, 3, &ConnectorStrategy::BfsGreedy { cap: 7 }, 0, 2).unwrap();
        assert_eq!(around, vec![0, 7, 6, 5, 4, 3]);
    }

    #[test]
    fn tree_embed_connects_a_sparse_graph() {
        let g = gnp_generate(200, 0.05, 0x900d);
        let used = vec![false; 200];
        let strat = ConnectorStrategy::TreeEmbed { samples: 50, cap: 8 };
        let p = connect(&g, &used, 0, 1, &strat, 7, 2).unwrap();
        assert_eq!(p[0], 0);
        assert_eq!(*p.last().unwrap(), 1);
        assert!(p.len() - 1 <= 8);
        for pair in p.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]));
        }
    }

    #[test]
    fn tree_embed_gives_up_when_free_degree_is_gone() {
        let g = complete(8);
        let mut used = vec![true; 8];
        used[0] = false;
        used[7] = false;
        let strat = ConnectorStrategy::TreeEmbed { samples: 40, cap: 4 };
        assert!(connect(&g, &used, 0, 7, &strat, 1, 2).is_none());
    }

    #[test]
    fn auto_resolution_follows_minimum_degree() {
        let dense = complete(30);
        assert_eq!(
            ConnectorStrategy::Auto.resolve(&dense, 6, 5),
            ConnectorStrategy::Distance2
        );
        let sparse = circulant(30, &[1, 2]).unwrap();
        assert_eq!(
            ConnectorStrategy::Auto.resolve(&sparse, 6, 5),
            ConnectorStrategy::BfsGreedy { cap: 6 }
        );
    }

    #[test]
    fn goodness_counts_free_neighbors_only() {
        let g = complete(10);
        let used = vec![false; 10];
        let full = connector_goodness(&g, &used, 100, 3);
        assert!((full - 9.0).abs() < 1e-9);
        let mut half = vec![false; 10];
        for v in 5..10 {
            half[v] = true;
        }
        let part = connector_goodness(&g, &half, 100, 3);
        assert!((part - 4.0).abs() < 1e-9);
    }
}
