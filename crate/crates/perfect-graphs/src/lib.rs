//! Exact, desk-scale machinery for perfect graph structure theory.
//!
//! Everything here is built around small simple graphs (tens of vertices)
//! and exact exponential-time searches whose results are re-validated
//! against the defining properties before being returned. The crate
//! provides:
//!
//! - [`graph`]: bitset-backed graphs and primitive queries (complement,
//!   induced subgraphs, holes, components, shortest paths between sets).
//! - [`oracle`]: exact ω, α, χ and perfection tests, the Lovász bound,
//!   and Gasparyan's stable-set/clique certificate for minimally
//!   imperfect graphs.
//! - [`basic`]: the four basic classes (bipartite, line graphs of
//!   bipartite, and their complements), recognition and ω-colorings,
//!   including König edge coloring.
//! - [`structure`]: 2-joins, 6-joins, skew partitions with cutset
//!   refinements (T-cutset, U-cutset, star, double star), and
//!   homogeneous pairs.
//! - [`wheels`]: wheel taxonomy (line, twin, universal, triangle-free,
//!   proper) and stretcher detection.
//! - [`decompose`]: 2-join blocks, replication, parity-controlled block
//!   colorings, coloring combination, and the recursive perfect-coloring
//!   pipeline.
//! - [`berge`]: Berge recognition, the Roussel–Rubio ("Wonderful")
//!   lemma checker, and executable decomposition-theorem predicates.
//! - [`io`], [`generate`], [`sweeps`], [`cli`]: file formats, corpus
//!   generators, theorem sweeps, and the `pgraph` command-line tool.
//!
//! Run `cargo run --example exact_invariants` (or any of the other
//! examples) for a tour.

pub mod basic;
pub mod berge;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod structure;
pub mod sweeps;
pub mod wheels;

pub use error::Error;
pub use graph::{Graph, HoleParity, Path, VertexSet};

/// Size caps for the exponential searches, in vertices.
///
/// Every exhaustive routine checks the relevant cap before starting and
/// returns [`Error::ResourceLimit`] when the input is too large. The
/// defaults are sized so that each search completes in milliseconds to
/// seconds; raise them deliberately if you have the patience.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Exact clique / stable set / chromatic number solvers.
    pub exact: usize,
    /// All-induced-subgraph scans (perfection, the Lovász bound).
    pub perfect: usize,
    /// Skew partition search.
    pub skew: usize,
    /// Homogeneous pair search.
    pub homogeneous: usize,
    /// Wheel enumeration.
    pub wheel: usize,
    /// Stretcher search.
    pub stretcher: usize,
    /// Berge recognition (hole scans in the graph and its complement).
    pub berge: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact: 32,
            perfect: 12,
            skew: 16,
            homogeneous: 14,
            wheel: 14,
            stretcher: 14,
            berge: 14,
        }
    }
}

impl Limits {
    /// Limits with every cap raised to `n`; useful for harnesses that
    /// deliberately run larger instances.
    pub fn at_least(n: usize) -> Self {
        let d = Limits::default();
        Limits {
            exact: d.exact.max(n),
            perfect: d.perfect.max(n),
            skew: d.skew.max(n),
            homogeneous: d.homogeneous.max(n),
            wheel: d.wheel.max(n),
            stretcher: d.stretcher.max(n),
            berge: d.berge.max(n),
        }
    }
}
