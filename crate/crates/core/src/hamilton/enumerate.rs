//! Exhaustive Hamilton cycle enumeration.
//!
//! Canonical form: every cycle is reported exactly once, as the vertex
//! sequence that starts at vertex 0 and whose second vertex is smaller
//! than its last. Cycles arrive in lexicographic order of that sequence.

use crate::graph::Graph;
use std::ops::ControlFlow;

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub cycles: Vec<Vec<u32>>,
    /// True when the limit cut the enumeration short.
    pub truncated: bool,
}

/// Calls `f` for each Hamilton cycle in canonical order. Returns false
/// when `f` broke out early.
pub fn for_each_hamilton_cycle(
    g: &Graph,
    f: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
) -> bool {
    let n = g.n();
    if n < 3 {
        return true;
    }
    let mut path = Vec::with_capacity(n);
    path.push(0u32);
    let mut visited = vec![false; n];
    visited[0] = true;
    dfs(g, &mut path, &mut visited, f).is_continue()
}

fn dfs(
    g: &Graph,
    path: &mut Vec<u32>,
    visited: &mut [bool],
    f: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    let end = *path.last().unwrap();
    if path.len() == n {
        if path[1] < end && g.has_edge(end, 0) {
            f(path)?;
        }
        return ControlFlow::Continue(());
    }
    for &w in g.adj(end) {
        if w == 0 || visited[w as usize] {
            continue;
        }
        visited[w as usize] = true;
        path.push(w);
        let flow = dfs(g, path, visited, f);
        path.pop();
        visited[w as usize] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Collects up to `limit` Hamilton cycles in canonical order.
#[must_use]
pub fn enumerate_hamilton_cycles(g: &Graph, limit: usize) -> Enumeration {
    let mut cycles = Vec::new();
    let mut truncated = false;
    for_each_hamilton_cycle(g, &mut |c| {
        if cycles.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        cycles.push(c.to_vec());
        ControlFlow::Continue(())
    });
    Enumeration { cycles, truncated }
}
