//! Graph files, certificate files and verification suites.

pub mod cert;
pub mod format;
pub mod suite;

pub use cert::Certificate;
pub use format::{graph_hash, parse_graph, read_graph, to_json, to_text, GraphRecord};
pub use suite::{find_suite, registry, run_suite, RunReport, SuiteConfig, TheoremSuite};
