//! Signless Laplacian spectral radius of small simple graphs.
//!
//! `q1lab` computes `q1(G)`, the largest eigenvalue of `Q(G) = D(G) + A(G)`,
//! evaluates the clique-number bounds on it together with several
//! degree-based bounds from the literature, builds the extremal graph
//! families, and verifies the inequalities and their equality cases by
//! exhaustive enumeration of connected graphs on up to seven vertices.
//!
//! Module map:
//!
//! - [`graph`]: bitset graphs, graph operations, exact clique and chromatic
//!   numbers, graph6 and edge-list formats.
//! - [`families`]: Turán graphs, kites, complete multipartite graphs and the
//!   other named constructions.
//! - [`spectral`]: `Q(G)`, a cyclic Jacobi eigensolver, Perron vectors and
//!   the Zykov-style symmetrization steps.
//! - [`bounds`]: closed-form bounds and per-graph [`bounds::BoundReport`]s.
//! - [`verify`]: enumeration, exhaustive sweeps, counterexample certificates
//!   and the comparison table.
//! - [`cli`]: the `q1lab` command-line driver.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result, Violation};
pub use graph::Graph;

/// Relative gap below which a bound counts as attained.
pub const EQ_TOL: f64 = 1e-7;

/// `true` when `a` and `b` agree to within `tol` relative to `max(1, |b|)`.
pub(crate) fn nearly_equal(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}
