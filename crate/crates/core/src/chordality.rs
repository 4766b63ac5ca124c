//! w-chordality: every minor has a simplicial vertex.
//!
//! Minors are enumerated by the number of removed vertices, then by the
//! removed set in lexicographic order, then by how many of those are deleted
//! (fewest first, lexicographic among equals). Distinct specs that produce
//! the same minor are only examined once.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::conn::con_r;
use crate::graph::Graph;
use crate::hypergraph::{ContractionFilter, Contractions, Hypergraph, MinorSpec};
use crate::vset::{k_subsets, VertexSet};

/// A minor without simplicial vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadMinorCertificate {
    pub spec: MinorSpec,
    pub minor_vertices: VertexSet,
    pub minor_edges: Vec<VertexSet>,
}

impl BadMinorCertificate {
    /// Re-applies the spec to `host` and checks the recorded minor and the
    /// absence of simplicial vertices.
    pub fn verify(&self, host: &Hypergraph) -> bool {
        let Ok(minor) = host.minor(&self.spec) else {
            return false;
        };
        minor.vertices() == self.minor_vertices
            && minor.edges() == self.minor_edges.as_slice()
            && !minor.vertices().is_empty()
            && minor.first_simplicial().is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordalDecision {
    /// Every enumerated minor has a simplicial vertex.
    Holds { minors: u64 },
    Fails(BadMinorCertificate),
    Unknown { minors: u64 },
}

impl ChordalDecision {
    pub fn holds(&self) -> bool {
        matches!(self, ChordalDecision::Holds { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, ChordalDecision::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ChordalDecision::Unknown { .. })
    }

    pub fn certificate(&self) -> Option<&BadMinorCertificate> {
        match self {
            ChordalDecision::Fails(c) => Some(c),
            _ => None,
        }
    }
}

/// Decides whether every minor of `h` (with nonempty vertex set) has a
/// simplicial vertex. `budget` bounds the number of distinct minors examined.
pub fn is_w_chordal(h: &Hypergraph, budget: u64) -> ChordalDecision {
    scan(h, budget, true)
}

/// Like [`is_w_chordal`] but only over contractions (`V_d = ∅`).
pub fn every_contraction_simplicial(h: &Hypergraph, budget: u64) -> ChordalDecision {
    scan(h, budget, false)
}

fn scan(h: &Hypergraph, budget: u64, with_deletions: bool) -> ChordalDecision {
    let vertices = h.vertices();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut examined = 0u64;
    for size in 0..vertices.len() {
        for removed in k_subsets(vertices, size) {
            let max_deleted = if with_deletions { size } else { 0 };
            for d in 0..=max_deleted {
                for deleted in k_subsets(removed, d) {
                    let contracted = removed.difference(deleted);
                    let Ok(minor) = h.minor_unchecked(deleted, contracted) else {
                        continue;
                    };
                    if !seen.insert(minor.canonical_key()) {
                        continue;
                    }
                    examined += 1;
                    if examined > budget {
                        return ChordalDecision::Unknown { minors: examined - 1 };
                    }
                    if minor.first_simplicial().is_none() {
                        return ChordalDecision::Fails(BadMinorCertificate {
                            spec: MinorSpec::new(deleted, contracted),
                            minor_vertices: minor.vertices(),
                            minor_edges: minor.edges().to_vec(),
                        });
                    }
                }
            }
        }
    }
    ChordalDecision::Holds { minors: examined }
}

/// Every contraction of `con_r(g)` without singleton edges.
pub fn c_prime_minor_stream(g: &Graph, r: usize) -> Contractions<'static> {
    con_r(g, r).into_contractions(ContractionFilter::CPrime)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(VertexSet::full(n), edges.iter().map(|e| VertexSet::from(*e))).unwrap()
    }

    fn whiskered_c4() -> Graph {
        Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(is_w_chordal(&hg(3, &[]), 100).holds());
        assert!(is_w_chordal(&hg(3, &[&[0, 1, 2]]), 100).holds());
        let c4 = hg(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        match is_w_chordal(&c4, 100) {
            ChordalDecision::Fails(cert) => {
                assert_eq!(cert.spec, MinorSpec::default());
                assert!(cert.verify(&c4));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn whiskered_cycle_contractions() {
        let g = whiskered_c4();
        assert!(every_contraction_simplicial(&con_r(&g, 1), 1 << 20).holds());
        match every_contraction_simplicial(&con_r(&g, 2), 1 << 20) {
            ChordalDecision::Fails(cert) => {
                assert!(cert.spec.deleted.is_empty());
                assert!(cert.verify(&con_r(&g, 2)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_gives_unknown() {
        let g = Graph::path(6);
        assert!(is_w_chordal(&con_r(&g, 2), 3).is_unknown());
        assert!(is_w_chordal(&con_r(&g, 2), 1 << 20).holds());
    }

    #[test]
    fn c_prime_stream_examples() {
        let k2 = Graph::complete(2);
        let specs: Vec<VertexSet> = c_prime_minor_stream(&k2, 1).map(|(vc, _)| vc).collect();
        assert_eq!(specs, vec![VertexSet::EMPTY]);
        let p4 = Graph::path(4);
        let first = c_prime_minor_stream(&p4, 2).next().unwrap();
        assert_eq!(first.0, VertexSet::EMPTY);
        assert_eq!(first.1, con_r(&p4, 2));
        assert_eq!(c_prime_minor_stream(&Graph::empty(3), 1).count(), 8);
    }

    #[test]
    fn tampered_certificate_fails() {
        let c4 = hg(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let mut cert = is_w_chordal(&c4, 100).certificate().unwrap().clone();
        cert.minor_edges.pop();
        assert!(!cert.verify(&c4));
    }
}
