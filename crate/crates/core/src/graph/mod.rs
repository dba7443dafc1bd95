//! Host graphs: simple undirected graphs with a canonical edge order.
//!
//! Edges are stored lexicographically sorted as pairs `(u, v)` with
//! `u < v`. The position of an edge in that sorted list is its edge index,
//! which is what [`crate::edgespace::EdgeVector`] bits refer to; the order
//! is part of the on-disk format contract (see [`io`]).

mod checks;
mod io;
mod spectral;

pub use checks::{
    cut_density_check, default_expansion_params, diameter_robustness_check, expansion_check,
    is_jumbled_exhaustive, is_jumbled_sampled, pair_edge_check, pair_edge_threshold,
    pseudorandomness_report, BetaSource, CheckError, CutDensityScan, DiameterScan, ExpansionScan,
    JumbledMode, JumbledScan, JumbledWitness, PairEdgeScan, PseudorandomReport, ReportConfig,
    ScanMode, COMBINATION_BUDGET, CUT_EXHAUSTIVE_LIMIT, JUMBLED_EXHAUSTIVE_LIMIT,
};
pub use io::{parse_edge_lines, parse_graph, read_graph, render_edge_lines, render_graph,
    write_graph, ParseError, ParseErrorKind};
pub use spectral::{spectral_beta, SpectralConfig, SpectralEstimate};

use crate::edgespace::EdgeVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: u32, n: usize },
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(u32, u32),
    #[error("circulant stride {stride} outside 1..={max}")]
    BadStride { stride: usize, max: usize },
}

/// Simple undirected graph with `n` vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may come in either
    /// orientation and duplicates collapse; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v as usize >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count; also the length of every edge vector over this graph.
    #[must_use]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic, `u < v`) order.
    #[must_use]
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    #[must_use]
    pub fn adj(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    #[must_use]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    #[must_use]
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    #[must_use]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical order.
    #[must_use]
    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// The `i`-th canonical edge.
    #[must_use]
    pub fn edge_at(&self, i: usize) -> (u32, u32) {
        self.edges[i]
    }

    /// Zero vector in this graph's edge space.
    #[must_use]
    pub fn zero_vector(&self) -> EdgeVector {
        EdgeVector::zeros(self.m())
    }

    /// All-ones vector: the whole edge set.
    #[must_use]
    pub fn full_vector(&self) -> EdgeVector {
        let mut v = EdgeVector::zeros(self.m());
        for i in 0..self.m() {
            v.set(i, true);
        }
        v
    }

    /// Edge vector of the star at `v` (all incident edges). Stars generate
    /// the cut space.
    #[must_use]
    pub fn star_vector(&self, v: u32) -> EdgeVector {
        let mut out = EdgeVector::zeros(self.m());
        for &w in self.adj(v) {
            out.set(self.edge_index(v, w).unwrap(), true);
        }
        out
    }

    /// Encodes a list of endpoint pairs as an edge vector.
    pub fn edge_vector(
        &self,
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<EdgeVector, GraphError> {
        let mut out = EdgeVector::zeros(self.m());
        for (u, v) in pairs {
            let i = self
                .edge_index(u, v)
                .ok_or(GraphError::NotAnEdge(u, v))?;
            out.set(i, true);
        }
        Ok(out)
    }

    /// Decodes an edge vector back to endpoint pairs in canonical order.
    #[must_use]
    pub fn vector_pairs(&self, v: &EdgeVector) -> Vec<(u32, u32)> {
        v.iter_ones().map(|i| self.edges[i]).collect()
    }

    /// Edge vector of a closed vertex walk (consecutive pairs plus the
    /// wrap-around edge).
    pub fn cycle_vector(&self, order: &[u32]) -> Result<EdgeVector, GraphError> {
        let mut out = EdgeVector::zeros(self.m());
        for k in 0..order.len() {
            let u = order[k];
            let v = order[(k + 1) % order.len()];
            let i = self.edge_index(u, v).ok_or(GraphError::NotAnEdge(u, v))?;
            out.set(i, true);
        }
        Ok(out)
    }

    /// Edge vector of a path given as a vertex order. Unlike [`Graph::cycle_vector`]
    /// the order is not closed up, so an order of k vertices yields k - 1 edges.
    pub fn path_vector(&self, order: &[u32]) -> Result<EdgeVector, GraphError> {
        let mut out = EdgeVector::zeros(self.m());
        for pair in order.windows(2) {
            let i = self
                .edge_index(pair[0], pair[1])
                .ok_or(GraphError::NotAnEdge(pair[0], pair[1]))?;
            out.set(i, true);
        }
        Ok(out)
    }

    /// Component id per vertex, numbered in order of smallest member.
    #[must_use]
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            queue.push_back(root as u32);
            while let Some(v) = queue.pop_front() {
                for &w in self.adj(v) {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    #[must_use]
    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Adjacency lists of the subgraph carrying exactly the edges of `r`.
    #[must_use]
    pub fn subgraph_adj(&self, r: &EdgeVector) -> Vec<Vec<u32>> {
        assert_eq!(r.len(), self.m(), "edge vector from a different graph");
        let mut adj = vec![Vec::new(); self.n];
        for i in r.iter_ones() {
            let (u, v) = self.edges[i];
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Induced subgraph on the vertices with `keep[v]` set, relabeled to
    /// `0..k` in increasing original order. Returns the subgraph and the
    /// map from new label to original vertex.
    #[must_use]
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<u32>) {
        assert_eq!(keep.len(), self.n);
        let map: Vec<u32> = (0..self.n as u32).filter(|&v| keep[v as usize]).collect();
        let mut back = vec![u32::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old as usize] = new as u32;
        }
        let pairs = self.edges.iter().filter_map(|&(u, v)| {
            (keep[u as usize] && keep[v as usize])
                .then(|| (back[u as usize], back[v as usize]))
        });
        let g = Graph::new(map.len(), pairs).expect("induced edges are valid");
        (g, map)
    }
}

/// Parameters of a seeded binomial random graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl RandomGraphSpec {
    #[must_use]
    pub fn generate(&self) -> Graph {
        gnp_generate(self.n, self.p, self.seed)
    }
}

/// G(n, p): each of the n(n-1)/2 vertex pairs becomes an edge
/// independently with probability `p`, in lexicographic pair order from a
/// ChaCha stream. Same (n, p, seed) always yields the same graph.
#[must_use]
pub fn gnp_generate(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are valid")
}

/// Circulant graph: vertex `v` joined to `v ± s (mod n)` for each stride
/// `s`. Strides must lie in `1..=n/2`; the stride `n/2` contributes each
/// edge once.
pub fn circulant(n: usize, strides: &[usize]) -> Result<Graph, GraphError> {
    let max = n / 2;
    let mut pairs = Vec::new();
    for &s in strides {
        if s == 0 || s > max {
            return Err(GraphError::BadStride { stride: s, max });
        }
        for v in 0..n {
            pairs.push((v as u32, ((v + s) % n) as u32));
        }
    }
    Graph::new(n, pairs)
}

/// K_n.
#[must_use]
pub fn complete(n: usize) -> Graph {
    let pairs = (0..n as u32).flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)));
    Graph::new(n, pairs).expect("complete graph pairs are valid")
}

/// The Petersen graph: outer 5-cycle, inner 5-cycle at stride 2, spokes.
#[must_use]
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5u32 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    Graph::new(10, pairs).expect("petersen pairs are valid")
}

/// Adds seeded random edges at minimum-degree vertices until the minimum
/// degree reaches `target`. Used to push random graphs into the dense
/// regime while keeping them random-looking elsewhere.
#[must_use]
pub fn densify_to_min_degree(g: &Graph, target: usize, seed: u64) -> Graph {
    let n = g.n();
    assert!(target < n, "target degree must leave room for simple edges");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<std::collections::BTreeSet<u32>> = (0..n)
        .map(|v| g.adj(v as u32).iter().copied().collect())
        .collect();
    loop {
        let v = (0..n).min_by_key(|&v| adj[v].len()).unwrap();
        if adj[v].len() >= target {
            break;
        }
        let candidates: Vec<u32> = (0..n as u32)
            .filter(|&w| w as usize != v && !adj[v].contains(&w))
            .collect();
        let w = candidates[rng.gen_range(0..candidates.len())];
        adj[v].insert(w);
        adj[w as usize].insert(v as u32);
    }
    let pairs = adj
        .iter()
        .enumerate()
        .flat_map(|(v, set)| set.iter().map(move |&w| (v as u32, w)));
    Graph::new(n, pairs).expect("densified pairs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edge_order_and_dedup() {
        let g = Graph::new(4, [(2, 1), (0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(2, 3), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            GraphError::OutOfRange { vertex: 3, n: 3 }
        );
    }

    #[test]
    fn gnp_extremes() {
        let empty = gnp_generate(6, 0.0, 1);
        assert_eq!(empty.m(), 0);
        let full = gnp_generate(6, 1.0, 1);
        assert_eq!(full.m(), 15);
    }

    #[test]
    fn gnp_deterministic() {
        let spec = RandomGraphSpec { n: 30, p: 0.4, seed: 99 };
        assert_eq!(spec.generate(), spec.generate());
        assert_ne!(
            gnp_generate(30, 0.4, 99).edges(),
            gnp_generate(30, 0.4, 100).edges()
        );
    }

    #[test]
    fn gnp_edge_count_near_mean() {
        // n = 201, p = 5 ln n / n: binomial over 20100 pairs. Four standard
        // deviations around the mean is the frozen sanity band.
        let n = 201usize;
        let p = 5.0 * (n as f64).ln() / n as f64;
        let g = gnp_generate(n, p, 1);
        let pairs = (n * (n - 1) / 2) as f64;
        let mean = pairs * p;
        let sd = (pairs * p * (1.0 - p)).sqrt();
        let dev = (g.m() as f64 - mean).abs();
        assert!(dev <= 4.0 * sd, "m = {}, mean = {mean:.1}, sd = {sd:.1}", g.m());
    }

    #[test]
    fn circulant_cases() {
        let c7 = circulant(7, &[1]).unwrap();
        assert_eq!(c7.m(), 7);
        assert!(c7.adj(0).iter().eq([1, 6].iter()));

        let k5 = circulant(5, &[1, 2]).unwrap();
        assert_eq!(k5, complete(5));

        let c9 = circulant(9, &[1, 2]).unwrap();
        assert_eq!(c9.m(), 18);
        assert!((0..9).all(|v| c9.degree(v) == 4));

        // Stride n/2 on even n contributes each edge once.
        let c4 = circulant(4, &[2]).unwrap();
        assert_eq!(c4.m(), 2);

        assert!(circulant(7, &[4]).is_err());
        assert!(circulant(7, &[0]).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![0, 0, 1, 1, 2]);
        assert!(!g.is_connected());
        assert!(complete(4).is_connected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = complete(5);
        let keep = [true, false, true, true, false];
        let (h, map) = g.induced(&keep);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(map, vec![0, 2, 3]);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn densify_reaches_target() {
        let g = gnp_generate(21, 0.3, 5);
        let d = densify_to_min_degree(&g, 12, 7);
        assert!(d.min_degree() >= 12);
        // Existing edges are preserved.
        for &(u, v) in g.edges() {
            assert!(d.has_edge(u, v));
        }
    }
}
