//! Parity-layered reachability from a root vertex.
//!
//! Both builders explore a subgraph given as adjacency lists, with one vertex
//! removed, and record which vertices can be reached by an even and by an odd
//! number of steps within a length bound. The fast builder runs breadth-first
//! search on (vertex, parity) states, so its notion of reachability is walk
//! reachability and a reconstructed route may repeat vertices. The exact
//! builder enumerates simple paths outright; it is exponential in the worst
//! case and is kept for small graphs, under a step budget.

/// Reachability by parity, plus enough bookkeeping to reconstruct routes.
pub(super) struct Layers {
    /// Shortest known length per vertex and parity; `usize::MAX` when unreached.
    dist: Vec<[usize; 2]>,
    /// Predecessor vertex per (vertex, parity) state, walk mode only.
    pred: Option<Vec<[u32; 2]>>,
    /// Stored simple path per (vertex, parity), exact mode only.
    paths: Option<Vec<[Option<Vec<u32>>; 2]>>,
    /// False when the exact builder ran out of budget before finishing.
    pub complete: bool,
    root: u32,
}

impl Layers {
    pub fn reachable(&self, v: u32, parity: usize) -> bool {
        self.dist[v as usize][parity] != usize::MAX
    }

    /// Route from the root to `v` with the given length parity. Exact mode
    /// returns the stored simple path; walk mode reconstructs through the
    /// predecessor states and may yield a repeated vertex, which callers
    /// must check before using the route in a cycle.
    pub fn route(&self, v: u32, parity: usize) -> Vec<u32> {
        assert!(self.reachable(v, parity), "route to unreached state");
        if let Some(paths) = &self.paths {
            return paths[v as usize][parity].clone().unwrap();
        }
        let pred = self.pred.as_ref().unwrap();
        let mut out = Vec::new();
        let (mut cur, mut par) = (v, parity);
        loop {
            out.push(cur);
            if cur == self.root && self.dist[cur as usize][par] == 0 {
                break;
            }
            let prev = pred[cur as usize][par];
            cur = prev;
            par ^= 1;
        }
        out.reverse();
        out
    }
}

/// Walk-semantics layers: breadth-first search over (vertex, parity) states
/// in `adj` minus the vertex `blocked`, out to `max_len` steps.
pub(super) fn walk_layers(adj: &[Vec<u32>], root: u32, blocked: u32, max_len: usize) -> Layers {
    let n = adj.len();
    let mut dist = vec![[usize::MAX; 2]; n];
    let mut pred = vec![[u32::MAX; 2]; n];
    let mut queue = std::collections::VecDeque::new();
    dist[root as usize][0] = 0;
    queue.push_back((root, 0usize));
    while let Some((v, par)) = queue.pop_front() {
        let d = dist[v as usize][par];
        if d == max_len {
            continue;
        }
        for &t in &adj[v as usize] {
            if t == blocked || dist[t as usize][par ^ 1] != usize::MAX {
                continue;
            }
            dist[t as usize][par ^ 1] = d + 1;
            pred[t as usize][par ^ 1] = v;
            queue.push_back((t, par ^ 1));
        }
    }
    Layers { dist, pred: Some(pred), paths: None, complete: true, root }
}

/// Path-semantics layers: depth-first enumeration of simple paths from the
/// root, recording the first path found per (vertex, parity). Each extension
/// costs one unit of `budget`; a run that exhausts it reports `complete: false`
/// and the recorded sets may be undercounts.
pub(super) fn exact_layers(
    adj: &[Vec<u32>],
    root: u32,
    blocked: u32,
    max_len: usize,
    budget: u64,
) -> Layers {
    let n = adj.len();
    let mut dist = vec![[usize::MAX; 2]; n];
    let mut paths: Vec<[Option<Vec<u32>>; 2]> = vec![[None, None]; n];
    dist[root as usize][0] = 0;
    paths[root as usize][0] = Some(vec![root]);
    let mut on_path = vec![false; n];
    on_path[root as usize] = true;
    let mut stack = vec![root];
    let mut remaining = budget;
    let complete = extend(
        adj,
        blocked,
        max_len,
        &mut stack,
        &mut on_path,
        &mut dist,
        &mut paths,
        &mut remaining,
    );
    Layers { dist, pred: None, paths: Some(paths), complete, root }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    adj: &[Vec<u32>],
    blocked: u32,
    max_len: usize,
    stack: &mut Vec<u32>,
    on_path: &mut [bool],
    dist: &mut [[usize; 2]],
    paths: &mut [[Option<Vec<u32>>; 2]],
    remaining: &mut u64,
) -> bool {
    if stack.len() > max_len {
        return true;
    }
    let v = *stack.last().unwrap();
    for i in 0..adj[v as usize].len() {
        let t = adj[v as usize][i];
        if t == blocked || on_path[t as usize] {
            continue;
        }
        if *remaining == 0 {
            return false;
        }
        *remaining -= 1;
        stack.push(t);
        on_path[t as usize] = true;
        let par = (stack.len() - 1) % 2;
        if dist[t as usize][par] == usize::MAX {
            dist[t as usize][par] = stack.len() - 1;
            paths[t as usize][par] = Some(stack.clone());
        }
        let ok = extend(adj, blocked, max_len, stack, on_path, dist, paths, remaining);
        stack.pop();
        on_path[t as usize] = false;
        if !ok {
            return false;
        }
    }
    true
}
