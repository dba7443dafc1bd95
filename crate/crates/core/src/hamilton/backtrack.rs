//! Budgeted exhaustive backtracking.

use crate::graph::Graph;

/// Tri-state search result. `ProvenNone` means the whole space was
/// explored within budget, so no solution exists; `Exhausted` means the
/// budget ran out first and proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<u32>),
    Exhausted,
    ProvenNone,
}

struct Search<'a> {
    g: &'a Graph,
    target: usize,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn spend(&mut self) -> bool {
        if self.budget == 0 {
            self.exhausted = true;
            return false;
        }
        self.budget -= 1;
        true
    }
}

/// Path from `start` through every vertex not in `avoid`, ending at
/// `goal` when given. Neighbors are tried in ascending order, so the
/// found path is the lexicographically first.
#[must_use]
pub fn backtrack_hamilton_path(
    g: &Graph,
    start: u32,
    goal: Option<u32>,
    avoid: &[u32],
    budget: u64,
) -> SearchOutcome {
    let n = g.n();
    let mut visited = vec![false; n];
    for &v in avoid {
        visited[v as usize] = true;
    }
    if visited[start as usize] || goal.is_some_and(|y| visited[y as usize]) {
        return SearchOutcome::ProvenNone;
    }
    let target = n - avoid.len();
    if target == 1 {
        return if goal.is_none_or(|y| y == start) {
            SearchOutcome::Found(vec![start])
        } else {
            SearchOutcome::ProvenNone
        };
    }
    if goal == Some(start) {
        return SearchOutcome::ProvenNone;
    }
    let mut s = Search { g, target, budget, exhausted: false };
    let mut path = vec![start];
    visited[start as usize] = true;
    match path_dfs(&mut s, &mut path, &mut visited, goal) {
        Some(p) => SearchOutcome::Found(p),
        None if s.exhausted => SearchOutcome::Exhausted,
        None => SearchOutcome::ProvenNone,
    }
}

fn path_dfs(
    s: &mut Search,
    path: &mut Vec<u32>,
    visited: &mut [bool],
    goal: Option<u32>,
) -> Option<Vec<u32>> {
    if !s.spend() {
        return None;
    }
    let end = *path.last().unwrap();
    if path.len() == s.target {
        return goal.is_none_or(|y| y == end).then(|| path.clone());
    }
    let last_slot = path.len() + 1 == s.target;
    for &w in s.g.adj(end) {
        if visited[w as usize] {
            continue;
        }
        // A fixed goal may only fill the final slot.
        if !last_slot && goal == Some(w) {
            continue;
        }
        visited[w as usize] = true;
        path.push(w);
        let found = path_dfs(s, path, visited, goal);
        path.pop();
        visited[w as usize] = false;
        if found.is_some() || s.exhausted {
            return found;
        }
    }
    None
}

/// Any Hamilton cycle of the whole graph, as a vertex sequence starting
/// at 0.
#[must_use]
pub fn backtrack_hamilton_cycle(g: &Graph, budget: u64) -> SearchOutcome {
    let n = g.n();
    if n < 3 {
        return SearchOutcome::ProvenNone;
    }
    let mut s = Search { g, target: n, budget, exhausted: false };
    let mut path = vec![0u32];
    let mut visited = vec![false; n];
    visited[0] = true;
    match cycle_dfs(&mut s, &mut path, &mut visited) {
        Some(c) => SearchOutcome::Found(c),
        None if s.exhausted => SearchOutcome::Exhausted,
        None => SearchOutcome::ProvenNone,
    }
}

fn cycle_dfs(s: &mut Search, path: &mut Vec<u32>, visited: &mut [bool]) -> Option<Vec<u32>> {
    if !s.spend() {
        return None;
    }
    let end = *path.last().unwrap();
    if path.len() == s.target {
        return s.g.has_edge(end, 0).then(|| path.clone());
    }
    for &w in s.g.adj(end) {
        if visited[w as usize] {
            continue;
        }
        visited[w as usize] = true;
        path.push(w);
        let found = cycle_dfs(s, path, visited);
        path.pop();
        visited[w as usize] = false;
        if found.is_some() || s.exhausted {
            return found;
        }
    }
    None
}
