//! Simplicial complexes stored by their facets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vset::{canonicalize, maximal_sets, VertexSet};

/// A simplicial complex given by its ground set and facet antichain.
///
/// No facets at all is the void complex; a single empty facet is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(ground: VertexSet, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::InvalidInput(format!(
                "face {f} is not contained in the ground set {ground}"
            )));
        }
        Ok(SimplicialComplex {
            ground,
            facets: maximal_sets(faces),
        })
    }

    pub(crate) fn from_facets(ground: VertexSet, mut facets: Vec<VertexSet>) -> Self {
        canonicalize(&mut facets);
        SimplicialComplex { ground, facets }
    }

    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![ground],
        }
    }

    #[inline]
    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Facets in canonical order (size, then lexicographic).
    #[inline]
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, `-1` for `{∅}`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|facet| f.is_subset(*facet))
    }

    /// Vertices lying in at least one facet.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(f));
        }
        Ok(SimplicialComplex::from_facets(
            self.ground.difference(f),
            self.facets
                .iter()
                .filter(|facet| f.is_subset(**facet))
                .map(|facet| facet.difference(f))
                .collect(),
        ))
    }

    /// `Δ \ F = {G ∈ Δ : G ∩ F = ∅}`.
    pub fn deletion(&self, f: VertexSet) -> Self {
        if self.facets.is_empty() {
            return SimplicialComplex::void(self.ground.difference(f));
        }
        SimplicialComplex {
            ground: self.ground.difference(f),
            facets: maximal_sets(self.facets.iter().map(|facet| facet.difference(f)).collect()),
        }
    }

    /// The cone over a new apex vertex.
    pub fn cone(&self, apex: usize) -> Result<Self> {
        if self.ground.contains(apex) {
            return Err(Error::InvalidInput(format!("apex {apex} already in the ground set")));
        }
        Ok(SimplicialComplex::from_facets(
            self.ground.with(apex),
            self.facets.iter().map(|f| f.with(apex)).collect(),
        ))
    }

    /// Applies an injective relabeling to the ground set and facets.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        SimplicialComplex::from_facets(
            self.ground.map(&f),
            self.facets.iter().map(|x| x.map(&f)).collect(),
        )
    }
}

/// Every component of `G[a]` has at most `r` vertices.
pub fn is_r_independent(g: &Graph, a: VertexSet, r: usize) -> bool {
    g.components_within(a).iter().all(|c| c.len() <= r)
}

/// `ind_r(G)`, enumerated directly on the graph: a vertex joins the current
/// set only if its component stays within `r` vertices.
pub fn ind_r_complex(g: &Graph, r: usize) -> SimplicialComplex {
    assert!(r >= 1, "r must be positive");
    let order = g.vertices().to_vec();
    let mut facets = Vec::new();
    grow_r_independent(g, r, &order, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut facets);
    SimplicialComplex::from_facets(g.vertices(), facets)
}

fn fits(g: &Graph, r: usize, set: VertexSet, v: usize) -> bool {
    g.component_within(v, set.with(v)).len() <= r
}

fn grow_r_independent(
    g: &Graph,
    r: usize,
    order: &[usize],
    depth: usize,
    current: VertexSet,
    excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if depth == order.len() {
        if excluded.iter().all(|v| !fits(g, r, current, v)) {
            out.push(current);
        }
        return;
    }
    let v = order[depth];
    let undecided: VertexSet = order[depth + 1..].iter().copied().collect();
    if fits(g, r, current, v) {
        grow_r_independent(g, r, order, depth + 1, current.with(v), excluded, out);
        // an excluded vertex must end up blocked by a component larger than r
        let reach = g.component_within(v, current.union(undecided).with(v));
        if reach.len() > r {
            grow_r_independent(g, r, order, depth + 1, current, excluded.with(v), out);
        }
    } else {
        grow_r_independent(g, r, order, depth + 1, current, excluded, out);
    }
}

/// `ind(H)`: facets are the maximal vertex sets containing no edge of `H`.
pub fn independence_complex(h: &Hypergraph) -> SimplicialComplex {
    let order = h.vertices().to_vec();
    let through: Vec<Vec<VertexSet>> = order
        .iter()
        .map(|&v| h.edges().iter().copied().filter(|e| e.contains(v)).collect())
        .collect();
    let mut facets = Vec::new();
    grow_independent(
        &order,
        &through,
        0,
        VertexSet::EMPTY,
        Vec::new(),
        &mut facets,
    );
    SimplicialComplex::from_facets(h.vertices(), facets)
}

fn grow_independent(
    order: &[usize],
    through: &[Vec<VertexSet>],
    depth: usize,
    current: VertexSet,
    excluded: Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if depth == order.len() {
        let maximal = excluded
            .iter()
            .all(|&i| through[i].iter().any(|e| e.is_subset(current.with(order[i]))));
        if maximal {
            out.push(current);
        }
        return;
    }
    let v = order[depth];
    let with_v = current.with(v);
    let free = !through[depth].iter().any(|e| e.is_subset(with_v));
    if free {
        grow_independent(order, through, depth + 1, with_v, excluded.clone(), out);
    }
    let undecided: VertexSet = order[depth + 1..].iter().copied().collect();
    let blockable = through[depth]
        .iter()
        .any(|e| e.without(v).is_subset(current.union(undecided)));
    if !free || blockable {
        let mut excluded = excluded;
        if free {
            excluded.push(depth);
        }
        grow_independent(order, through, depth + 1, current, excluded, out);
    }
}
