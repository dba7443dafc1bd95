//! Decomposition of a graph's cycle space into Hamilton cycles over GF(2).
//!
//! A set of edges of a host graph is a 0/1 vector indexed by the graph's
//! sorted edge list; addition is symmetric difference. The cycle space is
//! the span of all cycle edge sets, the cut space its orthogonal
//! complement. On graphs that are dense or pseudorandom enough and have an
//! odd number of vertices, the Hamilton cycles span the whole cycle space,
//! and this crate constructs such a spanning family explicitly:
//!
//! * [`edgespace`] — bit-packed edge vectors, echelon-form GF(2) bases,
//!   cycle/cut space constructions, maximum-weight coset search.
//! * [`graph`] — host graph type, generators, pseudorandomness checks,
//!   and the `cyclespan-v1` file format.
//! * [`hamilton`] — Hamilton path and cycle search: exhaustive
//!   enumeration, budgeted backtracking, rotation-extension.
//! * [`certificate`] — obstruction candidates orthogonal to every cycle
//!   found so far, their coset maximization and verification.
//! * [`switcher`] — even cycles meeting a certificate an odd number of
//!   times, and the parity-switcher gadget built around them.
//! * [`pipeline`] — the decomposition loop, brute-force span
//!   verification, and expressing cycles in a computed basis.
//!
//! All randomized search is driven by one root seed split per stage and
//! iteration (see [`seeds`]), so identical inputs replay identically.

pub mod certificate;
pub mod edgespace;
pub mod graph;
pub mod hamilton;
pub mod pipeline;
pub mod seeds;
pub mod switcher;
