//! Parity switchers: subgraphs traversable by two Hamilton paths whose
//! intersections with a fixed certificate have opposite parity.
//!
//! A switcher is assembled around an even cycle C = v1 .. v2k that meets the
//! certificate in an odd number of edges, found by [`find_odd_cycle`]. For
//! each j in 2 ..= k a connector path joins v_j to v_{2k-j+2}, vertex-disjoint
//! from everything else. Two traversals T1 and T2 then walk every connector
//! in full while splitting the cycle edges between them: T1 takes one half of
//! C and T2 the complementary half. Their symmetric difference is exactly C,
//! so exactly one of T1, T2 meets the certificate oddly, whichever parity a
//! surrounding construction needs. Both run from v1 to v_{k+1}.

mod connect;
mod cycle_lemma;
mod layers;

pub use connect::{connector_goodness, ConnectorStrategy};
pub use cycle_lemma::{find_odd_cycle, CycleLemmaConfig, CycleLemmaError};

use crate::edgespace::EdgeVector;
use crate::graph::Graph;

/// Assembly failure for a switcher or its parts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SwitcherError {
    #[error("cycle search failed: {0}")]
    Cycle(#[from] CycleLemmaError),
    #[error("bad core cycle: {reason}")]
    BadCycle { reason: &'static str },
    #[error("connector {index} does not run between its cycle vertices")]
    PathEndpoints { index: usize },
    #[error("connector {index} is not a path in the graph")]
    PathNotSimple { index: usize },
    #[error("vertex {vertex} appears in two parts of the switcher")]
    PathsOverlap { vertex: u32 },
    #[error("expected {expected} connectors, got {got}")]
    WrongPathCount { expected: usize, got: usize },
    #[error("no connector found for cycle position {index}")]
    ConnectorFailed { index: usize },
}

/// An even cycle whose intersection with a certificate has odd size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    vertices: Vec<u32>,
    r_edges: usize,
}

impl OddCycle {
    /// Validates the cycle: even length between 4 and `max_len`, distinct
    /// vertices, consecutive adjacency in `g` including the wrap, and an odd
    /// number of edges inside `r`.
    pub fn new(
        g: &Graph,
        r: &EdgeVector,
        vertices: Vec<u32>,
        max_len: usize,
    ) -> Result<Self, SwitcherError> {
        let len = vertices.len();
        if len < 4 {
            return Err(SwitcherError::BadCycle { reason: "shorter than four vertices" });
        }
        if len % 2 != 0 {
            return Err(SwitcherError::BadCycle { reason: "odd length" });
        }
        if len > max_len {
            return Err(SwitcherError::BadCycle { reason: "longer than the bound" });
        }
        let mut seen = std::collections::HashSet::new();
        if !vertices.iter().all(|&v| v < g.n() as u32 && seen.insert(v)) {
            return Err(SwitcherError::BadCycle { reason: "repeated or out-of-range vertex" });
        }
        let mut r_edges = 0;
        for k in 0..len {
            let (a, b) = (vertices[k], vertices[(k + 1) % len]);
            match g.edge_index(a, b) {
                Some(i) => r_edges += r.get(i) as usize,
                None => return Err(SwitcherError::BadCycle { reason: "missing edge" }),
            }
        }
        if r_edges % 2 == 0 {
            return Err(SwitcherError::BadCycle { reason: "even certificate intersection" });
        }
        Ok(OddCycle { vertices, r_edges })
    }

    #[must_use]
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of cycle edges inside the certificate. Always odd.
    #[must_use]
    pub fn certificate_edges(&self) -> usize {
        self.r_edges
    }

    pub fn edge_vector(&self, g: &Graph) -> EdgeVector {
        g.cycle_vector(&self.vertices).expect("validated cycle")
    }
}

/// Tuning for [`build_switcher`].
#[derive(Debug, Clone)]
pub struct SwitcherConfig {
    /// Radius bound for the core cycle; its length stays within `2 * ell`,
    /// and bounded connectors default their cap to `ell`.
    pub ell: usize,
    pub connector: ConnectorStrategy,
    /// Margin for resolving [`ConnectorStrategy::Auto`]: minimum degree at
    /// least n/2 plus this margin selects the distance-two connector.
    pub dense_margin: usize,
    /// Rotation for the cycle search root, for deterministic retries.
    pub uw_offset: usize,
    pub seed: u64,
}

impl Default for SwitcherConfig {
    fn default() -> Self {
        SwitcherConfig {
            ell: 10,
            connector: ConnectorStrategy::Auto,
            dense_margin: 5,
            uw_offset: 0,
            seed: 0,
        }
    }
}

/// A core cycle with its connector paths, ready to traverse.
#[derive(Debug, Clone)]
pub struct ParitySwitcher {
    cycle: OddCycle,
    /// paths[i] joins v_{i+2} to v_{2k-i}, endpoints included.
    paths: Vec<Vec<u32>>,
}

impl ParitySwitcher {
    /// Validates connector count, endpoints, simplicity, adjacency, and
    /// disjointness against the cycle and each other.
    pub fn new(
        g: &Graph,
        cycle: OddCycle,
        paths: Vec<Vec<u32>>,
    ) -> Result<Self, SwitcherError> {
        let k = cycle.len() / 2;
        if paths.len() != k - 1 {
            return Err(SwitcherError::WrongPathCount { expected: k - 1, got: paths.len() });
        }
        let v = |i: usize| cycle.vertices()[i - 1];
        let mut used: std::collections::HashSet<u32> = cycle.vertices().iter().copied().collect();
        for (idx, path) in paths.iter().enumerate() {
            let j = idx + 2;
            if path.len() < 2 || path[0] != v(j) || *path.last().unwrap() != v(2 * k - j + 2) {
                return Err(SwitcherError::PathEndpoints { index: j });
            }
            for pair in path.windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    return Err(SwitcherError::PathNotSimple { index: j });
                }
            }
            let mut local = std::collections::HashSet::new();
            if !path.iter().all(|&x| local.insert(x)) {
                return Err(SwitcherError::PathNotSimple { index: j });
            }
            for &x in &path[1..path.len() - 1] {
                if !used.insert(x) {
                    return Err(SwitcherError::PathsOverlap { vertex: x });
                }
            }
        }
        Ok(ParitySwitcher { cycle, paths })
    }

    #[must_use]
    pub fn cycle(&self) -> &OddCycle {
        &self.cycle
    }

    #[must_use]
    pub fn connectors(&self) -> &[Vec<u32>] {
        &self.paths
    }

    /// Both traversal endpoints: v1 and v_{k+1}.
    #[must_use]
    pub fn endpoints(&self) -> (u32, u32) {
        let k = self.cycle.len() / 2;
        (self.cycle.vertices()[0], self.cycle.vertices()[k])
    }

    /// Every vertex of the switcher, ascending.
    #[must_use]
    pub fn vertices(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.cycle.vertices().to_vec();
        for p in &self.paths {
            out.extend_from_slice(&p[1..p.len() - 1]);
        }
        out.sort_unstable();
        out
    }

    /// Switcher vertices other than the two traversal endpoints, ascending.
    #[must_use]
    pub fn interior(&self) -> Vec<u32> {
        let (a, b) = self.endpoints();
        self.vertices().into_iter().filter(|&x| x != a && x != b).collect()
    }

    /// The two Hamilton paths of the switcher, both from v1 to v_{k+1}.
    /// They share every connector edge and split the cycle edges between
    /// them, so their edge vectors differ by exactly the core cycle.
    #[must_use]
    pub fn hamilton_paths(&self) -> [Vec<u32>; 2] {
        let k = self.cycle.len() / 2;
        let v = |i: usize| {
            // 1-based cycle position, wrapping 2k+1 back to 1.
            self.cycle.vertices()[(i - 1) % (2 * k)]
        };
        let mut t1 = vec![v(1)];
        let mut t2 = vec![v(1)];
        for j in 2..=k {
            let path = &self.paths[j - 2];
            let inner = &path[1..path.len() - 1];
            let (near, far) = (v(j), v(2 * k - j + 2));
            if j % 2 == 0 {
                t1.push(near);
                t1.extend_from_slice(inner);
                t1.push(far);
                t2.push(far);
                t2.extend(inner.iter().rev());
                t2.push(near);
            } else {
                t1.push(far);
                t1.extend(inner.iter().rev());
                t1.push(near);
                t2.push(near);
                t2.extend_from_slice(inner);
                t2.push(far);
            }
        }
        t1.push(v(k + 1));
        t2.push(v(k + 1));
        [t1, t2]
    }

    /// Certificate parity of each traversal as edge counts mod 2. Exactly one
    /// entry is true.
    pub fn parities(&self, g: &Graph, r: &EdgeVector) -> [bool; 2] {
        let [t1, t2] = self.hamilton_paths();
        let count = |path: &[u32]| {
            path.windows(2)
                .map(|p| r.get(g.edge_index(p[0], p[1]).expect("validated path")) as usize)
                .sum::<usize>()
        };
        [count(&t1) % 2 == 1, count(&t2) % 2 == 1]
    }
}

/// Finds a core cycle for `r` and grows connectors around it.
pub fn build_switcher(
    g: &Graph,
    r: &EdgeVector,
    cfg: &SwitcherConfig,
) -> Result<ParitySwitcher, SwitcherError> {
    let lemma = CycleLemmaConfig { ell: cfg.ell, uw_offset: cfg.uw_offset, ..Default::default() };
    let cycle = find_odd_cycle(g, r, &lemma)?;
    grow_switcher(g, &cycle, cfg)
}

/// Grows connectors around an already-found core cycle.
pub fn grow_switcher(
    g: &Graph,
    cycle: &OddCycle,
    cfg: &SwitcherConfig,
) -> Result<ParitySwitcher, SwitcherError> {
    let strategy = cfg.connector.resolve(g, cfg.ell, cfg.dense_margin);
    let k = cycle.len() / 2;
    let mut used = vec![false; g.n()];
    for &v in cycle.vertices() {
        used[v as usize] = true;
    }
    let mut paths = Vec::with_capacity(k - 1);
    for j in 2..=k {
        let a = cycle.vertices()[j - 1];
        let b = cycle.vertices()[2 * k - j + 1];
        let path = connect::connect(g, &used, a, b, &strategy, cfg.seed, j as u64)
            .ok_or(SwitcherError::ConnectorFailed { index: j })?;
        for &x in &path[1..path.len() - 1] {
            used[x as usize] = true;
        }
        paths.push(path);
    }
    ParitySwitcher::new(g, cycle.clone(), paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, gnp_generate, Graph};
    use crate::hamilton::is_hamilton_path;

    /// Cycle 0..7 as v1..v8 with three two-edge connectors through fresh
    /// vertices 8, 9, 10, plus a certificate holding the single edge 0-1.
    fn figure_instance() -> (Graph, EdgeVector, OddCycle, Vec<Vec<u32>>) {
        let mut edges = Vec::new();
        for i in 0..8u32 {
            edges.push((i, (i + 1) % 8));
        }
        edges.extend([(1, 8), (8, 7), (2, 9), (9, 6), (3, 10), (10, 5)]);
        let g = Graph::new(11, edges).unwrap();
        let mut r = g.zero_vector();
        r.set(g.edge_index(0, 1).unwrap(), true);
        let cycle = OddCycle::new(&g, &r, (0..8).collect(), 16).unwrap();
        let paths = vec![vec![1, 8, 7], vec![2, 9, 6], vec![3, 10, 5]];
        (g, r, cycle, paths)
    }

    #[test]
    fn eight_cycle_traversals_match_the_pinned_orders() {
        let (g, r, cycle, paths) = figure_instance();
        let s = ParitySwitcher::new(&g, cycle, paths).unwrap();
        let [t1, t2] = s.hamilton_paths();
        assert_eq!(t1, vec![0, 1, 8, 7, 6, 9, 2, 3, 10, 5, 4]);
        assert_eq!(t2, vec![0, 7, 8, 1, 2, 9, 6, 5, 10, 3, 4]);
        assert_eq!(s.endpoints(), (0, 4));
        assert_eq!(s.parities(&g, &r), [true, false]);
    }

    #[test]
    fn traversals_are_hamilton_paths_of_the_switcher() {
        let (g, _, cycle, paths) = figure_instance();
        let s = ParitySwitcher::new(&g, cycle, paths).unwrap();
        let verts = s.vertices();
        assert_eq!(verts, (0..11).collect::<Vec<u32>>());
        let keep: Vec<bool> = (0..g.n()).map(|v| verts.contains(&(v as u32))).collect();
        let (w, map) = g.induced(&keep);
        let relabel = |p: &[u32]| -> Vec<u32> {
            p.iter().map(|&x| map.iter().position(|&m| m == x).unwrap() as u32).collect()
        };
        for t in s.hamilton_paths() {
            assert!(is_hamilton_path(&w, &relabel(&t)));
        }
    }

    #[test]
    fn traversal_difference_is_the_core_cycle() {
        let (g, _, cycle, paths) = figure_instance();
        let s = ParitySwitcher::new(&g, cycle.clone(), paths).unwrap();
        let [t1, t2] = s.hamilton_paths();
        let d = g.path_vector(&t1).unwrap().xor(&g.path_vector(&t2).unwrap());
        assert_eq!(d, cycle.edge_vector(&g));
    }

    #[test]
    fn four_cycle_switcher_uses_one_connector() {
        // K5 gives a 4-cycle core and a distance-two connector.
        let g = complete(5);
        let mut r = g.zero_vector();
        r.set(g.edge_index(0, 1).unwrap(), true);
        let s = build_switcher(&g, &r, &SwitcherConfig::default()).unwrap();
        assert_eq!(s.cycle().len(), 4);
        assert_eq!(s.connectors().len(), 1);
        let p = s.parities(&g, &r);
        assert!(p[0] ^ p[1]);
    }

    #[test]
    fn validation_rejects_broken_inputs() {
        let (g, r, cycle, mut paths) = figure_instance();
        assert!(matches!(
            ParitySwitcher::new(&g, cycle.clone(), paths[..2].to_vec()),
            Err(SwitcherError::WrongPathCount { expected: 3, got: 2 })
        ));
        let mut wrong = paths.clone();
        wrong[0] = vec![1, 8, 6];
        assert!(matches!(
            ParitySwitcher::new(&g, cycle.clone(), wrong),
            Err(SwitcherError::PathEndpoints { index: 2 })
        ));
        paths[1] = vec![2, 3, 4, 5, 6];
        assert!(matches!(
            ParitySwitcher::new(&g, cycle.clone(), paths),
            Err(SwitcherError::PathsOverlap { vertex: 3 })
        ));
        assert!(matches!(
            OddCycle::new(&g, &r, vec![0, 1, 2], 16),
            Err(SwitcherError::BadCycle { .. })
        ));
        let mut even_r = g.zero_vector();
        even_r.set(g.edge_index(0, 1).unwrap(), true);
        even_r.set(g.edge_index(2, 3).unwrap(), true);
        assert!(matches!(
            OddCycle::new(&g, &even_r, (0..8).collect(), 16),
            Err(SwitcherError::BadCycle { reason: "even certificate intersection" })
        ));
    }

    #[test]
    fn random_dense_graph_builds_switchers_with_opposite_parities() {
        // Certificates here imitate the dense near-crossing sets the cycle
        // search is meant for: a bipartition crossing set nudged off the cut
        // space by dropping one crossing edge or adding one inside edge.
        let g = gnp_generate(40, 0.6, 0xfeed);
        let crossing = |i: usize| {
            let (x, y) = g.edge_at(i);
            (x < 20) != (y < 20)
        };
        let spare = (0..g.m()).find(|&i| crossing(i)).unwrap();
        let inside = (0..g.m()).find(|&i| !crossing(i)).unwrap();
        let mut dropped = g.zero_vector();
        let mut widened = g.zero_vector();
        for i in 0..g.m() {
            dropped.set(i, crossing(i) && i != spare);
            widened.set(i, crossing(i) || i == inside);
        }
        for r in [dropped, widened] {
            let s = build_switcher(&g, &r, &SwitcherConfig::default()).unwrap();
            let p = s.parities(&g, &r);
            assert!(p[0] ^ p[1]);
            let d = {
                let [t1, t2] = s.hamilton_paths();
                g.path_vector(&t1).unwrap().xor(&g.path_vector(&t2).unwrap())
            };
            assert_eq!(d, s.cycle().edge_vector(&g));
        }
    }
}
