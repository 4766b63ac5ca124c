use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no maximum clique at vertex {0} has all other vertices in the first layer")]
    NoQualifyingClique(usize),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("contracting {0} produces the empty edge")]
    EmptyEdgeCollapse(VertexSet),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("invalid facet order: {0}")]
    InvalidOrder(String),
    #[error("{what} has size {size}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{0} is not a vertex cover")]
    NotAVertexCover(VertexSet),
    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
