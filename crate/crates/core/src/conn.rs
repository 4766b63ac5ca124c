//! The hypergraph `con_r(G)` of connected `(r+1)`-subsets.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vset::{canonicalize, VertexSet};

/// Every `k`-subset of `V(G)` inducing a connected subgraph, in canonical order.
///
/// Each set is grown from its minimum vertex by adding exclusive neighbors of
/// larger index, so every connected set is produced exactly once.
pub fn connected_subsets(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if k == 0 || k > g.vertex_count() {
        return out;
    }
    for anchor in 0..g.vertex_count() {
        let above = VertexSet::full(g.vertex_count()).difference(VertexSet::full(anchor + 1));
        let sub = VertexSet::singleton(anchor);
        let ext = g.neighbors(anchor).intersection(above);
        extend(g, k, above, sub, ext, &mut out);
    }
    canonicalize(&mut out);
    out
}

fn extend(
    g: &Graph,
    k: usize,
    above: VertexSet,
    sub: VertexSet,
    mut ext: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if sub.len() == k {
        out.push(sub);
        return;
    }
    let closed = sub.union(g.boundary(sub));
    while let Some(w) = ext.pop_min() {
        let exclusive = g
            .neighbors(w)
            .difference(closed)
            .intersection(above);
        extend(g, k, above, sub.with(w), ext.union(exclusive), out);
    }
}

/// `con_r(G)`: vertex set `V(G)`, edges the connected `(r+1)`-subsets.
pub fn con_r(g: &Graph, r: usize) -> Hypergraph {
    assert!(r >= 1, "r must be positive");
    Hypergraph::from_minimal(g.vertices(), connected_subsets(g, r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset::k_subsets;

    fn brute(g: &Graph, k: usize) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = k_subsets(g.vertices(), k)
            .into_iter()
            .filter(|s| g.is_connected_set(*s))
            .collect();
        canonicalize(&mut v);
        v
    }

    #[test]
    fn examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            connected_subsets(&p4, 3),
            vec![VertexSet::from([0, 1, 2]), VertexSet::from([1, 2, 3])]
        );
        assert!(connected_subsets(&Graph::complete(3), 4).is_empty());
        assert_eq!(connected_subsets(&Graph::cycle(5), 1).len(), 5);
    }

    #[test]
    fn con_r_examples() {
        let g = Graph::cycle(5);
        let h = con_r(&g, 1);
        let edges: Vec<VertexSet> = g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from([u, v]))
            .collect();
        let mut expected = edges;
        canonicalize(&mut expected);
        assert_eq!(h.edges(), expected.as_slice());
        assert_eq!(
            con_r(&Graph::path(4), 2).edges(),
            &[VertexSet::from([0, 1, 2]), VertexSet::from([1, 2, 3])]
        );
        assert!(con_r(&Graph::empty(5), 2).edges().is_empty());
    }

    #[test]
    fn matches_brute_force() {
        let graphs = [
            Graph::complete(6),
            Graph::cycle(7),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (3, 6)])
                .unwrap(),
            Graph::from_edges(6, &[(0, 5), (5, 2), (2, 4), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=g.vertex_count() {
                assert_eq!(connected_subsets(g, k), brute(g, k), "{g:?} k={k}");
            }
        }
    }
}
