//! Text form for a graph together with its Hamilton-cycle basis.
//!
//! ```text
//! cyclespan-basis v1
//! seed 7
//! variant dense
//! rank 6
//! graph 5 10
//! 0 1
//! ...
//! cycles
//! 0 1 2 3 4
//! ...
//! end
//! ```
//!
//! The graph block is the plain graph format inlined after its `graph n m`
//! banner. Rendering is canonical, so equal inputs produce equal bytes, and
//! parsing re-validates everything: each cycle line must be a Hamilton cycle
//! of the graph, the family must be independent, and the declared rank must
//! both match the line count and fill the cycle space.

use super::{HamiltonBasis, Variant};
use crate::edgespace::Gf2Basis;
use crate::graph::{parse_graph, render_graph, Graph};
use crate::hamilton::is_hamilton_cycle;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct DecompositionError {
    pub line: usize,
    pub kind: DecompositionErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionErrorKind {
    #[error("expected `cyclespan-basis v1` header")]
    Header,
    #[error("expected `{0} <value>`")]
    Meta(&'static str),
    #[error("bad graph block: {0}")]
    Graph(String),
    #[error("bad cycle line")]
    Cycle,
    #[error("not a Hamilton cycle of the graph")]
    NotHamilton,
    #[error("cycle depends on the ones above it")]
    Dependent,
    #[error("declared rank {declared} but found {got} cycle lines")]
    RankCount { declared: usize, got: usize },
    #[error("rank {got} does not fill the cycle space dimension {need}")]
    RankIncomplete { need: usize, got: usize },
    #[error("content after `end`")]
    Trailing,
}

fn fail(line: usize, kind: DecompositionErrorKind) -> DecompositionError {
    DecompositionError { line, kind }
}

/// Canonical text form of a basis over its graph.
#[must_use]
pub fn render_decomposition(g: &Graph, basis: &HamiltonBasis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cyclespan-basis v1");
    let _ = writeln!(out, "seed {}", basis.seed);
    let _ = writeln!(out, "variant {}", basis.variant);
    let _ = writeln!(out, "rank {}", basis.rank());
    let _ = write!(out, "graph {}", render_graph(g));
    let _ = writeln!(out, "cycles");
    for cycle in &basis.cycles {
        let words: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    let _ = writeln!(out, "end");
    out
}

struct Cursor<'a> {
    lines: Vec<&'a str>,
    at: usize,
}

impl<'a> Cursor<'a> {
    /// Returns the next line with its 1-based number.
    fn next(&mut self, expect: &'static str) -> Result<(usize, &'a str), DecompositionError> {
        let no = self.at + 1;
        let line = self
            .lines
            .get(self.at)
            .ok_or(fail(no, DecompositionErrorKind::Meta(expect)))?;
        self.at += 1;
        Ok((no, line))
    }

    fn meta_u64(&mut self, key: &'static str) -> Result<u64, DecompositionError> {
        let (no, line) = self.next(key)?;
        line.strip_prefix(key)
            .and_then(|rest| rest.strip_prefix(' '))
            .and_then(|v| v.parse().ok())
            .ok_or(fail(no, DecompositionErrorKind::Meta(key)))
    }
}

/// Parses and fully re-validates a decomposition document.
pub fn parse_decomposition(text: &str) -> Result<(Graph, HamiltonBasis), DecompositionError> {
    let mut cur = Cursor { lines: text.lines().collect(), at: 0 };

    let (no, header) = cur.next("cyclespan-basis")?;
    if header != "cyclespan-basis v1" {
        return Err(fail(no, DecompositionErrorKind::Header));
    }
    let seed = cur.meta_u64("seed")?;
    let (no, vline) = cur.next("variant")?;
    let variant = match vline.strip_prefix("variant ") {
        Some("dense") => Variant::Dense,
        Some("sparse") => Variant::Sparse,
        _ => return Err(fail(no, DecompositionErrorKind::Meta("variant"))),
    };
    let rank = cur.meta_u64("rank")? as usize;

    let (gline_no, gline) = cur.next("graph")?;
    let banner = gline
        .strip_prefix("graph ")
        .ok_or(fail(gline_no, DecompositionErrorKind::Meta("graph")))?;
    let m: usize = banner
        .split(' ')
        .nth(1)
        .and_then(|t| t.parse().ok())
        .ok_or(fail(gline_no, DecompositionErrorKind::Meta("graph")))?;
    let mut block = String::from(banner);
    block.push('\n');
    for _ in 0..m {
        let (_, line) = cur.next("edge")?;
        block.push_str(line);
        block.push('\n');
    }
    let g = parse_graph(&block).map_err(|e| {
        // Block line 1 is the banner on the `graph` line itself.
        fail(gline_no + e.line - 1, DecompositionErrorKind::Graph(e.kind.to_string()))
    })?;

    let (no, marker) = cur.next("cycles")?;
    if marker != "cycles" {
        return Err(fail(no, DecompositionErrorKind::Meta("cycles")));
    }
    let mut cycles = Vec::with_capacity(rank);
    let mut spanned = Gf2Basis::new();
    while cycles.len() < rank {
        let short = DecompositionErrorKind::RankCount { declared: rank, got: cycles.len() };
        let at_end = cur.lines.len() + 1;
        let (no, line) = cur.next("cycle").map_err(|_| fail(at_end, short.clone()))?;
        if line == "end" {
            return Err(fail(no, short));
        }
        let cycle: Vec<u32> = line
            .split(' ')
            .map(|t| t.parse().map_err(|_| fail(no, DecompositionErrorKind::Cycle)))
            .collect::<Result<_, _>>()?;
        if !is_hamilton_cycle(&g, &cycle) {
            return Err(fail(no, DecompositionErrorKind::NotHamilton));
        }
        if !spanned.insert(&g.cycle_vector(&cycle).expect("validated cycle")) {
            return Err(fail(no, DecompositionErrorKind::Dependent));
        }
        cycles.push(cycle);
    }
    let need = g.m() + g.component_count() - g.n();
    if rank != need {
        return Err(fail(cur.at, DecompositionErrorKind::RankIncomplete { need, got: rank }));
    }
    let (no, tail) = cur.next("end")?;
    if tail != "end" {
        return Err(fail(no, DecompositionErrorKind::Meta("end")));
    }
    if cur.at != cur.lines.len() {
        return Err(fail(cur.at + 1, DecompositionErrorKind::Trailing));
    }
    Ok((
        g,
        HamiltonBasis {
            cycles,
            iterations: Vec::new(),
            variant,
            target_rank: rank,
            seed,
        },
    ))
}

pub fn read_decomposition(
    path: impl AsRef<Path>,
) -> Result<(Graph, HamiltonBasis), std::io::Error> {
    let text = std::fs::read_to_string(path)?;
    parse_decomposition(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn write_decomposition(
    path: impl AsRef<Path>,
    g: &Graph,
    basis: &HamiltonBasis,
) -> Result<(), std::io::Error> {
    std::fs::write(path, render_decomposition(g, basis))
}
