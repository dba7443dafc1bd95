//! GF(2) linear algebra over a graph's edge set.
//!
//! An [`EdgeVector`] is a bit-packed 0/1 vector indexed by edge index;
//! XOR is symmetric difference of edge sets, and the inner product
//! `<a, b>` is the parity of their intersection. A [`Gf2Basis`] keeps its
//! vectors in reduced echelon form: each vector's pivot is its lowest set
//! bit, pivots strictly increase, and no other basis vector is set at a
//! pivot position. That makes membership tests and coordinate solves a
//! single reduction pass.
//!
//! The graph-aware constructions live here too: a fundamental-cycle basis
//! of the cycle space, a star-cut basis of the cut space, and the
//! maximum-weight search over a coset `r0 + cut space`. The exhaustive
//! coset scan is what guarantees the cut-counting inequality used by the
//! obstruction certificates: at a true maximum, no bipartition flip can
//! gain weight, which is exactly `e_r(A,B) >= e_g(A,B)/2` for all cuts.

use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeSpaceError {
    #[error("vector lies in the cut space; its coset is the cut space itself")]
    InCutSpace,
    #[error("exhaustive coset scan limited to n <= {limit}, got n = {n}")]
    CosetTooLarge { n: usize, limit: usize },
    #[error("hex dump has wrong length: expected {expected} chars, got {got}")]
    HexLength { expected: usize, got: usize },
    #[error("hex dump contains a non-hex character")]
    HexDigit,
    #[error("hex dump sets bits past the edge count")]
    HexTrailingBits,
}

/// Bit-packed vector over GF(2), indexed by edge index `0..len`.
///
/// Bits past `len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    words: Vec<u64>,
    len: usize,
}

impl EdgeVector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        EdgeVector { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Number of edge positions (not the number of set bits).
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Symmetric difference in place. Lengths must match.
    pub fn xor_assign(&mut self, other: &EdgeVector) {
        assert_eq!(self.len, other.len, "edge vectors from different graphs");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &EdgeVector) -> EdgeVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the intersection: `|a AND b| mod 2`.
    #[must_use]
    pub fn dot(&self, other: &EdgeVector) -> bool {
        assert_eq!(self.len, other.len, "edge vectors from different graphs");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Size of the intersection.
    #[must_use]
    pub fn and_weight(&self, other: &EdgeVector) -> usize {
        assert_eq!(self.len, other.len, "edge vectors from different graphs");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of set bits.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn lowest_set_bit(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + bit)
            })
        })
    }

    /// Lowercase hex dump of the packed bytes (little-endian bit order:
    /// edge index 8j+b is bit b of byte j). Round trips exactly.
    #[must_use]
    pub fn to_hex(&self) -> String {
        let bytes = self.len.div_ceil(8);
        let mut out = String::with_capacity(bytes * 2);
        for j in 0..bytes {
            let byte = (self.words[j / 8] >> (8 * (j % 8))) & 0xff;
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    pub fn from_hex(len: usize, hex: &str) -> Result<Self, EdgeSpaceError> {
        let bytes = len.div_ceil(8);
        if hex.len() != bytes * 2 {
            return Err(EdgeSpaceError::HexLength { expected: bytes * 2, got: hex.len() });
        }
        let mut v = Self::zeros(len);
        for j in 0..bytes {
            let byte = u8::from_str_radix(&hex[2 * j..2 * j + 2], 16)
                .map_err(|_| EdgeSpaceError::HexDigit)?;
            v.words[j / 8] |= (byte as u64) << (8 * (j % 8));
        }
        // Trailing bits must be zero so that equal sets compare equal.
        if v.len % 64 != 0 {
            let last = v.words.len() - 1;
            let mask = (1u64 << (v.len % 64)) - 1;
            if v.words[last] & !mask != 0 {
                return Err(EdgeSpaceError::HexTrailingBits);
            }
        }
        Ok(v)
    }
}

impl std::fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeVector[{}; ", self.len)?;
        f.debug_set().entries(self.iter_ones()).finish()?;
        write!(f, "]")
    }
}

/// GF(2) basis in reduced echelon form.
///
/// Invariants: every vector's pivot is its lowest set bit, pivots strictly
/// increase with basis position, and no vector is set at another vector's
/// pivot.
#[derive(Debug, Clone, Default)]
pub struct Gf2Basis {
    vectors: Vec<EdgeVector>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    #[must_use]
    pub fn new() -> Self {
        Gf2Basis::default()
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    #[must_use]
    pub fn vectors(&self) -> &[EdgeVector] {
        &self.vectors
    }

    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the basis. Zero iff `v`
    /// is in the span; `reduce(v) XOR v` is always in the span.
    #[must_use]
    pub fn reduce(&self, v: &EdgeVector) -> EdgeVector {
        let mut r = v.clone();
        for (vec, &p) in self.vectors.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(vec);
            }
        }
        r
    }

    #[must_use]
    pub fn in_span(&self, v: &EdgeVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v` if independent. Returns true when the rank grew.
    pub fn insert(&mut self, v: &EdgeVector) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.lowest_set_bit() else {
            return false;
        };
        // Clear the new pivot from existing vectors to stay reduced.
        for vec in &mut self.vectors {
            if vec.get(pivot) {
                vec.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.vectors.insert(at, r);
        true
    }

    /// Basis positions whose vectors XOR to `v`, or `None` if `v` is
    /// outside the span. Positions are ascending; uniqueness follows from
    /// the reduced form.
    #[must_use]
    pub fn solve_combination(&self, v: &EdgeVector) -> Option<Vec<usize>> {
        let mut r = v.clone();
        let mut used = Vec::new();
        for (i, (vec, &p)) in self.vectors.iter().zip(&self.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(vec);
                used.push(i);
            }
        }
        r.is_zero().then_some(used)
    }
}

/// Fundamental-cycle basis of the cycle space: one vector per non-tree
/// edge of a BFS spanning forest. Rank is `m - n + c`.
#[must_use]
pub fn cycle_space_basis(g: &Graph) -> Gf2Basis {
    let n = g.n();
    let mut parent = vec![u32::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = std::collections::VecDeque::new();
    let mut tree_edge = vec![false; g.m()];
    for root in 0..n as u32 {
        if visited[root as usize] {
            continue;
        }
        visited[root as usize] = true;
        order.push_back(root);
        while let Some(v) = order.pop_front() {
            for &w in g.adj(v) {
                if !visited[w as usize] {
                    visited[w as usize] = true;
                    parent[w as usize] = v;
                    let e = g.edge_index(v, w).unwrap();
                    parent_edge[w as usize] = e;
                    tree_edge[e] = true;
                    depth[w as usize] = depth[v as usize] + 1;
                    order.push_back(w);
                }
            }
        }
    }

    let mut basis = Gf2Basis::new();
    for e in 0..g.m() {
        if tree_edge[e] {
            continue;
        }
        let (mut u, mut v) = g.edge_at(e);
        let mut cycle = EdgeVector::zeros(g.m());
        cycle.set(e, true);
        while depth[u as usize] > depth[v as usize] {
            cycle.flip(parent_edge[u as usize]);
            u = parent[u as usize];
        }
        while depth[v as usize] > depth[u as usize] {
            cycle.flip(parent_edge[v as usize]);
            v = parent[v as usize];
        }
        while u != v {
            cycle.flip(parent_edge[u as usize]);
            cycle.flip(parent_edge[v as usize]);
            u = parent[u as usize];
            v = parent[v as usize];
        }
        let grew = basis.insert(&cycle);
        debug_assert!(grew, "fundamental cycles are independent");
    }
    basis
}

/// Star-cut basis of the cut space: the star of every vertex except one
/// root per component. Rank is `n - c`.
#[must_use]
pub fn cut_space_basis(g: &Graph) -> Gf2Basis {
    let comp = g.components();
    let mut seen_root = vec![false; g.component_count()];
    let mut basis = Gf2Basis::new();
    for v in 0..g.n() {
        if !seen_root[comp[v]] {
            seen_root[comp[v]] = true;
            continue;
        }
        let grew = basis.insert(&g.star_vector(v as u32));
        debug_assert!(grew, "stars minus one per component are independent");
    }
    basis
}

/// How [`coset_max_weight`] searches the coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetScan {
    /// Gray-code walk over all `2^(n-1)` cuts. Guarantees the global
    /// maximum, hence the cut-counting inequality at the result.
    Exhaustive,
    /// Steepest-ascent over single-vertex flips from `restarts` seeded
    /// starting points. Ties broken toward the lowest vertex id.
    LocalSearch { restarts: usize, seed: u64 },
    /// Exhaustive up to [`COSET_EXHAUSTIVE_LIMIT`] vertices, local search
    /// with 16 restarts beyond.
    Auto { seed: u64 },
}

/// Largest `n` the exhaustive coset scan accepts.
pub const COSET_EXHAUSTIVE_LIMIT: usize = 24;

/// Result of a coset search.
#[derive(Debug, Clone)]
pub struct CosetMax {
    pub vector: EdgeVector,
    pub weight: usize,
    /// True when the scan was exhaustive, i.e. the weight is the global
    /// maximum over the coset.
    pub exhaustive: bool,
}

/// Maximum-weight element of the coset `r0 + cut space`.
///
/// `r0` must lie outside the cut space (otherwise the coset is the cut
/// space itself and the call is rejected). The returned element differs
/// from `r0` by a cut, so the whole coset stays disjoint from the cut
/// space.
pub fn coset_max_weight(
    g: &Graph,
    r0: &EdgeVector,
    scan: CosetScan,
) -> Result<CosetMax, EdgeSpaceError> {
    assert_eq!(r0.len(), g.m(), "edge vector from a different graph");
    if cut_space_basis(g).in_span(r0) {
        return Err(EdgeSpaceError::InCutSpace);
    }
    match scan {
        CosetScan::Exhaustive => coset_exhaustive(g, r0),
        CosetScan::LocalSearch { restarts, seed } => Ok(coset_local(g, r0, restarts, seed)),
        CosetScan::Auto { seed } => {
            if g.n() <= COSET_EXHAUSTIVE_LIMIT {
                coset_exhaustive(g, r0)
            } else {
                Ok(coset_local(g, r0, 16, seed))
            }
        }
    }
}

fn coset_exhaustive(g: &Graph, r0: &EdgeVector) -> Result<CosetMax, EdgeSpaceError> {
    let n = g.n();
    if n > COSET_EXHAUSTIVE_LIMIT {
        return Err(EdgeSpaceError::CosetTooLarge { n, limit: COSET_EXHAUSTIVE_LIMIT });
    }
    let stars: Vec<EdgeVector> = (0..n as u32).map(|v| g.star_vector(v)).collect();
    // Fix the last vertex outside the flipped side: every cut equals
    // star-sum of some A not containing it, so 2^(n-1) steps cover the
    // whole cut space (possibly repeating cuts in disconnected graphs).
    let free = n.saturating_sub(1) as u32;
    let mut cur = r0.clone();
    let mut best = cur.clone();
    let mut best_weight = cur.weight();
    let steps: u64 = 1u64 << free;
    for k in 1..steps {
        let v = k.trailing_zeros() as usize;
        cur.xor_assign(&stars[v]);
        let w = cur.weight();
        if w > best_weight {
            best_weight = w;
            best = cur.clone();
        }
    }
    Ok(CosetMax { vector: best, weight: best_weight, exhaustive: true })
}

fn coset_local(g: &Graph, r0: &EdgeVector, restarts: usize, seed: u64) -> CosetMax {
    let n = g.n();
    let stars: Vec<EdgeVector> = (0..n as u32).map(|v| g.star_vector(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, EdgeVector)> = None;
    for restart in 0..restarts.max(1) {
        let mut cur = r0.clone();
        if restart > 0 {
            for star in stars.iter().take(n.saturating_sub(1)) {
                if rng.gen::<bool>() {
                    cur.xor_assign(star);
                }
            }
        }
        // delta[v]: weight change from flipping v's side of the cut.
        let mut delta: Vec<isize> =
            (0..n).map(|v| g.degree(v as u32) as isize - 2 * cur.and_weight(&stars[v]) as isize).collect();
        loop {
            let mut pick: Option<(isize, usize)> = None;
            for (v, &d) in delta.iter().enumerate() {
                if d > 0 && pick.map_or(true, |(bd, _)| d > bd) {
                    pick = Some((d, v));
                }
            }
            let Some((_, v)) = pick else { break };
            cur.xor_assign(&stars[v as usize]);
            delta[v] = -delta[v];
            for &w in g.adj(v as u32) {
                let e = g.edge_index(v as u32, w).unwrap();
                // Edge v-w toggled: w's intersection count moved by one.
                if cur.get(e) {
                    delta[w as usize] -= 2;
                } else {
                    delta[w as usize] += 2;
                }
            }
        }
        let w = cur.weight();
        if best.as_ref().map_or(true, |(bw, _)| w > *bw) {
            best = Some((w, cur));
        }
    }
    let (weight, vector) = best.expect("at least one restart");
    CosetMax { vector, weight, exhaustive: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant, complete, Graph};

    fn k5() -> Graph {
        complete(5)
    }

    #[test]
    fn xor_and_dot_basics() {
        let a = EdgeVector::from_indices(10, [0, 3, 7]);
        let b = EdgeVector::from_indices(10, [3, 7, 9]);
        assert_eq!(a.xor(&b), EdgeVector::from_indices(10, [0, 9]));
        assert!(!a.dot(&b), "intersection {{3, 7}} has even parity");
        let c = EdgeVector::from_indices(10, [0, 4]);
        assert!(a.dot(&c), "intersection {{0}} has odd parity");
        assert_eq!(a.xor(&a), EdgeVector::zeros(10));
    }

    #[test]
    fn iter_ones_ascending_across_words() {
        let v = EdgeVector::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.weight(), 4);
        assert_eq!(v.lowest_set_bit(), Some(0));
    }

    #[test]
    fn hex_round_trip() {
        let v = EdgeVector::from_indices(21, [0, 8, 20]);
        let hex = v.to_hex();
        assert_eq!(hex.len(), 6);
        assert_eq!(EdgeVector::from_hex(21, &hex).unwrap(), v);

        assert_eq!(
            EdgeVector::from_hex(21, "ff"),
            Err(EdgeSpaceError::HexLength { expected: 6, got: 2 })
        );
        // Bit 21 set in a 21-bit vector.
        assert_eq!(
            EdgeVector::from_hex(21, "000020"),
            Err(EdgeSpaceError::HexTrailingBits)
        );
    }

    #[test]
    fn basis_insert_reduce_solve() {
        let mut basis = Gf2Basis::new();
        let a = EdgeVector::from_indices(6, [0, 1]);
        let b = EdgeVector::from_indices(6, [1, 2]);
        assert!(basis.insert(&a));
        assert!(basis.insert(&b));
        assert!(!basis.insert(&a.xor(&b)), "dependent vector must not grow rank");
        assert_eq!(basis.rank(), 2);

        let v = EdgeVector::from_indices(6, [0, 2]);
        assert!(basis.in_span(&v));
        // Positions refer to the reduced basis, so recombine to confirm.
        let combo = basis.solve_combination(&v).unwrap();
        let mut recombined = EdgeVector::zeros(6);
        for &i in &combo {
            recombined.xor_assign(&basis.vectors()[i]);
        }
        assert_eq!(recombined, v);
        let outside = EdgeVector::from_indices(6, [3]);
        assert_eq!(basis.solve_combination(&outside), None);
        assert_eq!(basis.reduce(&outside), outside);
    }

    #[test]
    fn basis_stays_reduced() {
        let mut basis = Gf2Basis::new();
        basis.insert(&EdgeVector::from_indices(8, [2, 5, 7]));
        basis.insert(&EdgeVector::from_indices(8, [0, 2, 5]));
        basis.insert(&EdgeVector::from_indices(8, [2, 3]));
        let pivots = basis.pivots().to_vec();
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, v) in basis.vectors().iter().enumerate() {
            assert_eq!(v.lowest_set_bit(), Some(pivots[i]));
            for (j, &p) in pivots.iter().enumerate() {
                if i != j {
                    assert!(!v.get(p), "vector {i} set at pivot {p} of vector {j}");
                }
            }
        }
    }

    #[test]
    fn cycle_space_ranks() {
        assert_eq!(cycle_space_basis(&k5()).rank(), 6);
        let tree = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(cycle_space_basis(&tree).rank(), 0);
        let c7 = circulant(7, &[1]).unwrap();
        let basis = cycle_space_basis(&c7);
        assert_eq!(basis.rank(), 1);
        assert_eq!(basis.vectors()[0], c7.full_vector());
    }

    #[test]
    fn cut_space_ranks_and_orthogonality() {
        let g = k5();
        let cuts = cut_space_basis(&g);
        assert_eq!(cuts.rank(), 4);
        let cycles = cycle_space_basis(&g);
        for c in cycles.vectors() {
            for d in cuts.vectors() {
                assert!(!c.dot(d), "cycle and cut spaces must be orthogonal");
            }
        }
        assert_eq!(cycles.rank() + cuts.rank(), g.m());
    }

    #[test]
    fn cut_space_of_disconnected_graph() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(cut_space_basis(&g).rank(), 6 - 2);
        assert_eq!(cycle_space_basis(&g).rank(), g.m() + 2 - 6);
    }

    /// Independent oracle: all coset members via every subset of vertices
    /// (star sums), collected without Gray-code increments.
    fn coset_members_bruteforce(g: &Graph, r0: &EdgeVector) -> Vec<EdgeVector> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 0u64..(1 << (n - 1)) {
            let mut v = r0.clone();
            for b in 0..n - 1 {
                if mask >> b & 1 == 1 {
                    v.xor_assign(&g.star_vector(b as u32));
                }
            }
            out.push(v);
        }
        out.sort_by_key(EdgeVector::to_hex);
        out.dedup();
        out
    }

    #[test]
    fn coset_max_on_triangle() {
        // Coset of one triangle edge: three singletons and the whole
        // triangle. The maximum is the triangle itself, weight 3.
        let g = complete(3);
        let r0 = g.edge_vector([(0, 1)]).unwrap();
        let members = coset_members_bruteforce(&g, &r0);
        assert_eq!(members.len(), 4);
        let oracle_max = members.iter().map(EdgeVector::weight).max().unwrap();
        assert_eq!(oracle_max, 3);

        let got = coset_max_weight(&g, &r0, CosetScan::Exhaustive).unwrap();
        assert_eq!(got.weight, 3);
        assert_eq!(got.vector, g.full_vector());
        assert!(got.exhaustive);
    }

    #[test]
    fn coset_max_on_k5_matches_bruteforce() {
        let g = k5();
        // A 5-cycle is outside the cut space (it meets triangles oddly).
        let r0 = g
            .edge_vector([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
            .unwrap();
        let members = coset_members_bruteforce(&g, &r0);
        let oracle_max = members.iter().map(EdgeVector::weight).max().unwrap();
        let got = coset_max_weight(&g, &r0, CosetScan::Exhaustive).unwrap();
        assert_eq!(got.weight, oracle_max);
        // Result stays in the coset: difference from r0 is a cut.
        assert!(cut_space_basis(&g).in_span(&got.vector.xor(&r0)));
    }

    #[test]
    fn coset_rejects_cut_space_member() {
        let g = k5();
        let r0 = g.star_vector(2);
        assert!(matches!(
            coset_max_weight(&g, &r0, CosetScan::Exhaustive),
            Err(EdgeSpaceError::InCutSpace)
        ));
    }

    #[test]
    fn coset_local_search_reaches_exhaustive_weight_on_small_graphs() {
        for seed in 0..6u64 {
            let g = crate::graph::gnp_generate(10, 0.5, 1000 + seed);
            let cycles = cycle_space_basis(&g);
            if cycles.rank() == 0 {
                continue;
            }
            let r0 = cycles.vectors()[0].clone();
            if cut_space_basis(&g).in_span(&r0) {
                continue;
            }
            let ex = coset_max_weight(&g, &r0, CosetScan::Exhaustive).unwrap();
            let ls =
                coset_max_weight(&g, &r0, CosetScan::LocalSearch { restarts: 16, seed: 5 })
                    .unwrap();
            assert!(ls.weight <= ex.weight);
            assert!(
                ls.weight >= ex.weight - 1,
                "local search fell far short: {} vs {}",
                ls.weight,
                ex.weight
            );
            assert!(cut_space_basis(&g).in_span(&ls.vector.xor(&r0)));
        }
    }

    /// At an exhaustive maximum, every bipartition keeps at least half the
    /// crossing edges: flipping it would otherwise gain weight.
    #[test]
    fn exhaustive_coset_max_satisfies_cut_counting() {
        let g = crate::graph::gnp_generate(9, 0.55, 42);
        assert!(g.is_connected());
        let r0 = cycle_space_basis(&g).vectors()[0].clone();
        let r = coset_max_weight(&g, &r0, CosetScan::Exhaustive).unwrap().vector;
        for mask in 1u32..(1 << (g.n() - 1)) {
            let side: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
            let (mut cross_g, mut cross_r) = (0usize, 0usize);
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if side[u as usize] != side[v as usize] {
                    cross_g += 1;
                    if r.get(i) {
                        cross_r += 1;
                    }
                }
            }
            assert!(2 * cross_r >= cross_g, "mask {mask:b}: {cross_r} of {cross_g}");
        }
    }
}
