//! Simple hypergraphs with deletion, contraction and minors.
//!
//! Vertex labels are never renumbered: a minor keeps the labels of the
//! surviving vertices, so certificates can name vertices of the host.

use std::borrow::Cow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{k_subsets, minimal_sets, VertexSet};

/// A vertex set together with an antichain of nonempty edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: VertexSet,
    /// Canonical order: by size, then lexicographic.
    edges: Vec<VertexSet>,
}

/// Which vertices a minor deletes and which it contracts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorSpec {
    pub deleted: VertexSet,
    pub contracted: VertexSet,
}

impl MinorSpec {
    pub fn new(deleted: VertexSet, contracted: VertexSet) -> Self {
        MinorSpec {
            deleted,
            contracted,
        }
    }

    pub fn contraction(contracted: VertexSet) -> Self {
        MinorSpec {
            deleted: VertexSet::EMPTY,
            contracted,
        }
    }

    /// Total number of removed vertices.
    pub fn size(&self) -> usize {
        self.deleted.len() + self.contracted.len()
    }
}

/// Restriction applied by [`Hypergraph::contractions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionFilter {
    /// Every contraction that does not collapse an edge.
    All,
    /// Only contractions without singleton edges.
    CPrime,
}

impl Hypergraph {
    /// Builds a simple hypergraph, keeping the inclusion-minimal raw edges.
    pub fn new(vertices: VertexSet, raw_edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let raw: Vec<VertexSet> = raw_edges.into_iter().collect();
        for e in &raw {
            if e.is_empty() {
                return Err(Error::InvalidEdge("empty edge".into()));
            }
            if !e.is_subset(vertices) {
                return Err(Error::InvalidEdge(format!(
                    "edge {e} is not contained in the vertex set {vertices}"
                )));
            }
        }
        Ok(Hypergraph {
            vertices,
            edges: minimal_sets(raw),
        })
    }

    /// Trusted constructor for edge families already known to be valid.
    pub(crate) fn from_minimal(vertices: VertexSet, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.iter().all(|e| !e.is_empty() && e.is_subset(vertices)));
        Hypergraph {
            vertices,
            edges: minimal_sets(edges),
        }
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_singleton(&self) -> bool {
        // canonical order puts singletons first
        self.edges.first().is_some_and(|e| e.len() == 1)
    }

    /// Vertices appearing in singleton edges.
    pub fn singleton_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .take_while(|e| e.len() == 1)
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// `H \ v`: drops `v` and every edge through it.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(Hypergraph {
            vertices: self.vertices.without(v),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(v))
                .collect(),
        })
    }

    /// `H / v`: removes `v` from every edge and keeps the minimal results.
    pub fn contract_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let single = VertexSet::singleton(v);
        if self.edges.contains(&single) {
            return Err(Error::EmptyEdgeCollapse(single));
        }
        Ok(Hypergraph {
            vertices: self.vertices.without(v),
            edges: minimal_sets(self.edges.iter().map(|e| e.without(v)).collect()),
        })
    }

    /// `H \ V_d / V_c` computed in one pass.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Self> {
        if let Some(v) = spec
            .deleted
            .union(spec.contracted)
            .difference(self.vertices)
            .min()
        {
            return Err(Error::InvalidVertex(v));
        }
        if !spec.deleted.is_disjoint(spec.contracted) {
            return Err(Error::InvalidInput(format!(
                "deleted {} and contracted {} overlap",
                spec.deleted, spec.contracted
            )));
        }
        self.minor_unchecked(spec.deleted, spec.contracted)
    }

    pub(crate) fn minor_unchecked(&self, deleted: VertexSet, contracted: VertexSet) -> Result<Self> {
        let mut raw = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if !e.is_disjoint(deleted) {
                continue;
            }
            let rest = e.difference(contracted);
            if rest.is_empty() {
                return Err(Error::EmptyEdgeCollapse(contracted));
            }
            raw.push(rest);
        }
        Ok(Hypergraph {
            vertices: self.vertices.difference(deleted).difference(contracted),
            edges: minimal_sets(raw),
        })
    }

    /// Whether `v` is simplicial: any two edges through `v` have a third edge
    /// inside their union with `v` removed.
    pub fn is_simplicial(&self, v: usize) -> bool {
        if !self.vertices.contains(v) {
            return false;
        }
        let through: Vec<VertexSet> = self.edges.iter().copied().filter(|e| e.contains(v)).collect();
        for i in 0..through.len() {
            for j in i + 1..through.len() {
                let pool = through[i].union(through[j]).without(v);
                if !self.edges.iter().any(|e| e.is_subset(pool)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn simplicial_vertices(&self) -> VertexSet {
        self.vertices.iter().filter(|&v| self.is_simplicial(v)).collect()
    }

    /// Smallest simplicial vertex, if any.
    pub fn first_simplicial(&self) -> Option<usize> {
        self.vertices.iter().find(|&v| self.is_simplicial(v))
    }

    /// Every contraction set of `V(H)` by size then lexicographic order,
    /// skipping those that collapse an edge; duplicates are kept.
    pub fn contractions(&self, filter: ContractionFilter) -> Contractions<'_> {
        Contractions {
            host: Cow::Borrowed(self),
            filter,
            size: 0,
            batch: k_subsets(self.vertices, 0),
            pos: 0,
        }
    }

    /// Owning variant of [`Hypergraph::contractions`].
    pub fn into_contractions(self, filter: ContractionFilter) -> Contractions<'static> {
        Contractions {
            host: Cow::Owned(self),
            filter,
            size: 0,
            batch: vec![VertexSet::EMPTY],
            pos: 0,
        }
    }

    /// Hashable canonical key: vertex bits followed by edge bits.
    pub fn canonical_key(&self) -> Vec<u64> {
        std::iter::once(self.vertices.bits())
            .chain(self.edges.iter().map(|e| e.bits()))
            .collect()
    }

    /// Applies `f` to every label. `f` must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        Hypergraph::from_minimal(
            self.vertices.map(&f),
            self.edges.iter().map(|e| e.map(&f)).collect(),
        )
    }
}

/// Iterator returned by [`Hypergraph::contractions`].
pub struct Contractions<'a> {
    host: Cow<'a, Hypergraph>,
    filter: ContractionFilter,
    size: usize,
    batch: Vec<VertexSet>,
    pos: usize,
}

impl Iterator for Contractions<'_> {
    type Item = (VertexSet, Hypergraph);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            while self.pos == self.batch.len() {
                if self.size >= self.host.vertices.len() {
                    return None;
                }
                self.size += 1;
                self.batch = k_subsets(self.host.vertices, self.size);
                self.pos = 0;
            }
            let vc = self.batch[self.pos];
            self.pos += 1;
            let Ok(h) = self.host.minor_unchecked(VertexSet::EMPTY, vc) else {
                continue;
            };
            if self.filter == ContractionFilter::CPrime && h.has_singleton() {
                continue;
            }
            return Some((vc, h));
        }
    }
}
