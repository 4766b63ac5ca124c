//! Graph files: a plain edge list and a JSON mirror.
//!
//! Text: first line `n m`, then `m` lines `u v` (0-based). Everything after
//! `#` on a line is ignored. JSON: `{"n": 4, "edges": [[0, 1], ...],
//! "labels": [...]}` with `labels` optional.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructions::LabeledGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The JSON shape of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphRecord {
    pub fn from_graph(g: &Graph) -> Self {
        GraphRecord {
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: None,
        }
    }

    pub fn from_labeled(lg: &LabeledGraph) -> Self {
        GraphRecord {
            labels: Some(lg.labels.clone()),
            ..GraphRecord::from_graph(&lg.graph)
        }
    }

    pub fn to_labeled(&self) -> Result<LabeledGraph> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = build(self.n, &pairs)?;
        match &self.labels {
            None => Ok(LabeledGraph::unlabeled(graph)),
            Some(labels) if labels.len() == self.n => Ok(LabeledGraph {
                graph,
                labels: labels.clone(),
            }),
            Some(labels) => Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            ))),
        }
    }
}

/// Rejects loops, duplicates and out-of-range endpoints.
fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut seen = HashSet::new();
    for &(u, v) in edges {
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge {u} {v} leaves the vertex range 0..{n}"
            )));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidGraph(format!("duplicate edge {u} {v}")));
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses either format; input starting with `{` is read as JSON.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    if text.trim_start().starts_with('{') {
        let record: GraphRecord = serde_json::from_str(text)?;
        record.to_labeled()
    } else {
        parse_text(text).map(LabeledGraph::unlabeled)
    }
}

pub fn read_graph(path: &Path) -> Result<LabeledGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

fn parse_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header \"n m\"".into(),
        });
    };
    let [n, m] = numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        edges.push(numbers(line, body).map(|[u, v]| (u, v))?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    build(n, &edges)
}

fn numbers(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got {body:?}"),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            msg: format!("not a vertex index: {s:?}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// Canonical text form: sorted edges with `u < v`.
pub fn to_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(lg: &LabeledGraph) -> String {
    serde_json::to_string(&GraphRecord::from_labeled(lg)).expect("graph records serialize")
}

/// SHA-256 of the canonical text form, hex encoded.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(to_text(g).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g.graph, Graph::cycle(4));
        let g = parse_graph(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.graph, Graph::complete(2));
        assert!(matches!(parse_graph("2 1\n0 0"), Err(Error::InvalidGraph(_))));
        assert!(matches!(parse_graph("2 2\n0 1\n1 0"), Err(Error::InvalidGraph(_))));
        assert!(matches!(parse_graph("3 1\n0 7"), Err(Error::InvalidGraph(_))));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("{\"n\": 2"), Err(Error::Json(_))));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n3 2 # header\n\n0 1\n1 2 # last\n").unwrap();
        assert_eq!(g.graph, Graph::path(3));
    }

    #[test]
    fn round_trips() {
        let g = Graph::from_edges(5, &[(4, 0), (2, 1), (3, 2)]).unwrap();
        let text = to_text(&g);
        assert_eq!(text, "5 3\n0 4\n1 2\n2 3\n");
        assert_eq!(parse_graph(&text).unwrap().graph, g);
        let lg = LabeledGraph {
            graph: g.clone(),
            labels: ["a", "b", "c", "d", "e"].map(String::from).to_vec(),
        };
        assert_eq!(parse_graph(&to_json(&lg)).unwrap(), lg);
    }

    #[test]
    fn hash_depends_only_on_graph() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(graph_hash(&a), graph_hash(&b));
        assert_ne!(graph_hash(&a), graph_hash(&Graph::complete(3)));
        assert_eq!(graph_hash(&a).len(), 64);
    }
}
