//! Higher independence complexes of graphs.
//!
//! The crate builds the `r`-independence complex `ind_r(G)` (vertex sets whose
//! induced components all have at most `r` vertices) together with the
//! hypergraph `con_r(G)` of connected `(r+1)`-subsets, whose independence
//! complex is the same object. On top of that it decides shellability of
//! nonpure complexes and w-chordality of hypergraphs, producing certificates
//! that can be re-checked independently, and it generates the graph families
//! (block graphs, clique paths and cycles, star-clique attachments, clique
//! whiskerings, the `G_t` counterexample trees) used by the theorem suites in
//! [`harness`].

pub mod census;
pub mod chordality;
pub mod complex;
pub mod conn;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod shelling;
pub mod vset;

pub use chordality::{BadMinorCertificate, ChordalDecision};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{Hypergraph, MinorSpec};
pub use shelling::{ShellDecision, ShellingCertificate};
pub use vset::VertexSet;

/// Search-node limit used when nothing else is configured.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "RINDEP_BUDGET";

/// The default node budget, honoring [`BUDGET_ENV`] when it parses.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}
