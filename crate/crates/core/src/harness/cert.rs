//! Certificate files binding a decision to a host graph.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::format::{graph_hash, GraphRecord};
use crate::chordality::BadMinorCertificate;
use crate::complex::ind_r_complex;
use crate::conn::con_r;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::MinorSpec;
use crate::shelling::{prefix_search, verify_shelling, ShellDecision};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A shelling order of the facets of `ind_r(G)`.
    ShellingOrder {
        graph_hash: String,
        r: usize,
        order: Vec<VertexSet>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        graph: Option<GraphRecord>,
    },
    /// A minor of `con_r(G)` without simplicial vertices.
    BadMinor {
        graph_hash: String,
        r: usize,
        deleted: VertexSet,
        contracted: VertexSet,
        minor_vertices: VertexSet,
        minor_edges: Vec<VertexSet>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        graph: Option<GraphRecord>,
    },
    /// The exhaustive facet-order search for `ind_r(G)` finished without a
    /// shelling after `nodes` steps; verification reruns it.
    ExhaustedSearch {
        graph_hash: String,
        r: usize,
        facets: usize,
        nodes: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        graph: Option<GraphRecord>,
    },
}

impl Certificate {
    pub fn shelling(g: &Graph, r: usize, order: Vec<VertexSet>) -> Self {
        Certificate::ShellingOrder {
            graph_hash: graph_hash(g),
            r,
            order,
            graph: Some(GraphRecord::from_graph(g)),
        }
    }

    pub fn bad_minor(g: &Graph, r: usize, cert: &BadMinorCertificate) -> Self {
        Certificate::BadMinor {
            graph_hash: graph_hash(g),
            r,
            deleted: cert.spec.deleted,
            contracted: cert.spec.contracted,
            minor_vertices: cert.minor_vertices,
            minor_edges: cert.minor_edges.clone(),
            graph: Some(GraphRecord::from_graph(g)),
        }
    }

    pub fn exhausted(g: &Graph, r: usize, facets: usize, nodes: u64) -> Self {
        Certificate::ExhaustedSearch {
            graph_hash: graph_hash(g),
            r,
            facets,
            nodes,
            graph: Some(GraphRecord::from_graph(g)),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ShellingOrder { .. } => "shelling_order",
            Certificate::BadMinor { .. } => "bad_minor",
            Certificate::ExhaustedSearch { .. } => "exhausted_search",
        }
    }

    pub fn r(&self) -> usize {
        match self {
            Certificate::ShellingOrder { r, .. }
            | Certificate::BadMinor { r, .. }
            | Certificate::ExhaustedSearch { r, .. } => *r,
        }
    }

    fn hash(&self) -> &str {
        match self {
            Certificate::ShellingOrder { graph_hash, .. }
            | Certificate::BadMinor { graph_hash, .. }
            | Certificate::ExhaustedSearch { graph_hash, .. } => graph_hash,
        }
    }

    /// The embedded host graph, if the certificate carries one.
    pub fn embedded_graph(&self) -> Result<Option<Graph>> {
        let record = match self {
            Certificate::ShellingOrder { graph, .. }
            | Certificate::BadMinor { graph, .. }
            | Certificate::ExhaustedSearch { graph, .. } => graph,
        };
        record
            .as_ref()
            .map(|rec| rec.to_labeled().map(|lg| lg.graph))
            .transpose()
    }

    /// Checks the certificate against `g`. A hash mismatch is an error;
    /// `Ok(false)` means the claim itself does not hold.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if self.hash() != graph_hash(g) {
            return Err(Error::Certificate(
                "certificate is bound to a different graph".into(),
            ));
        }
        let r = self.r();
        if r == 0 {
            return Err(Error::Certificate("r must be positive".into()));
        }
        match self {
            Certificate::ShellingOrder { order, .. } => {
                match verify_shelling(&ind_r_complex(g, r), order) {
                    Ok(ok) => Ok(ok),
                    Err(Error::InvalidOrder(_)) => Ok(false),
                    Err(e) => Err(e),
                }
            }
            Certificate::BadMinor {
                deleted,
                contracted,
                minor_vertices,
                minor_edges,
                ..
            } => {
                let cert = BadMinorCertificate {
                    spec: MinorSpec::new(*deleted, *contracted),
                    minor_vertices: *minor_vertices,
                    minor_edges: minor_edges.clone(),
                };
                Ok(cert.verify(&con_r(g, r)))
            }
            Certificate::ExhaustedSearch { facets, nodes, .. } => {
                let d = ind_r_complex(g, r);
                if d.facet_count() != *facets {
                    return Ok(false);
                }
                Ok(matches!(
                    prefix_search(&d, nodes.saturating_add(1)),
                    ShellDecision::NotShellable { .. }
                ))
            }
        }
    }

    /// Verifies against the embedded graph.
    pub fn verify_self_contained(&self) -> Result<bool> {
        let g = self
            .embedded_graph()?
            .ok_or_else(|| Error::Certificate("no graph embedded; supply one".into()))?;
        self.verify(&g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Certificate::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::is_w_chordal;
    use crate::shelling::is_shellable;

    #[test]
    fn shelling_certificate_round_trip() {
        let g = Graph::path(5);
        let ShellDecision::Shellable(c) = is_shellable(&ind_r_complex(&g, 2), 10_000) else {
            panic!("paths are shellable");
        };
        let cert = Certificate::shelling(&g, 2, c.order);
        let json = cert.to_json();
        assert!(json.contains("\"kind\": \"shelling_order\""));
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
        assert!(back.verify(&g).unwrap());
        assert!(back.verify_self_contained().unwrap());
        assert!(matches!(back.verify(&Graph::path(4)), Err(Error::Certificate(_))));
    }

    #[test]
    fn bad_orders_do_not_verify() {
        let g = Graph::cycle(4);
        let d = ind_r_complex(&g, 1);
        let cert = Certificate::shelling(&g, 1, d.facets().to_vec());
        assert!(!cert.verify(&g).unwrap());
        let cert = Certificate::shelling(&g, 1, vec![VertexSet::from([0, 2])]);
        assert!(!cert.verify(&g).unwrap());
    }

    #[test]
    fn bad_minor_and_exhausted_certificates() {
        let g = Graph::cycle(4);
        let decision = is_w_chordal(&con_r(&g, 1), 1000);
        let cert = Certificate::bad_minor(&g, 1, decision.certificate().unwrap());
        let json = cert.to_json();
        assert!(json.contains("\"kind\": \"bad_minor\""));
        assert!(Certificate::from_json(&json).unwrap().verify(&g).unwrap());
        let d = ind_r_complex(&g, 1);
        let ShellDecision::NotShellable { nodes } = prefix_search(&d, 1000) else {
            panic!("ind(C4) is not shellable");
        };
        let cert = Certificate::exhausted(&g, 1, d.facet_count(), nodes);
        assert!(cert.verify(&g).unwrap());
        let path = Graph::path(4);
        let forged = Certificate::exhausted(&path, 1, 3, 10);
        assert!(!forged.verify(&path).unwrap());
    }
}
