//! Exhaustive lists of small graphs up to isomorphism.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest order [`graphs`] will enumerate.
pub const GRAPH_LIMIT: usize = 8;
/// Largest order [`trees`] and [`forests`] will enumerate.
pub const TREE_LIMIT: usize = 16;

fn too_large(what: &'static str, size: usize, limit: usize) -> Error {
    Error::TooLarge { what, size, limit }
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn graphs(n: usize) -> Result<Vec<Graph>> {
    if n > GRAPH_LIMIT {
        return Err(too_large("graph census", n, GRAPH_LIMIT));
    }
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u64..1 << (k - 1) {
                let mut h = g.clone();
                let v = h.add_vertices(1)?;
                for u in VertexSet::from_bits(mask) {
                    h.add_edge(u, v);
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

/// A complete isomorphism invariant: the smallest upper-triangle adjacency
/// code over all relabelings that respect a stable color refinement.
pub fn canonical_form(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(n <= 16, "canonical_form supports at most 16 vertices");
    let colors = refine(g);
    // cells of equally colored vertices, in color order
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colors[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = u128::MAX;
    let mut order = Vec::with_capacity(n);
    search_orders(g, &cells, 0, &mut order, &mut best);
    best
}

fn search_orders(g: &Graph, cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, best: &mut u128) {
    if cell == cells.len() {
        *best = (*best).min(encode(g, order));
        return;
    }
    let mut members = cells[cell].clone();
    permute_all(&mut members, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        search_orders(g, cells, cell + 1, order, best);
        order.truncate(len);
    });
}

fn permute_all(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Bit `(i, j)` with `i < j` set when `order[i]` and `order[j]` are adjacent.
fn encode(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Color refinement started from degrees; colors are ranks of signatures,
/// so they are invariant under relabeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let before = colors.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n > TREE_LIMIT {
        return Err(too_large("tree census", n, TREE_LIMIT));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 2..=n {
        level = grow(&level, false)?;
    }
    Ok(level)
}

/// One representative per isomorphism class of forests on `n` vertices.
pub fn forests(n: usize) -> Result<Vec<Graph>> {
    if n > TREE_LIMIT {
        return Err(too_large("forest census", n, TREE_LIMIT));
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 1..=n {
        level = grow(&level, true)?;
    }
    Ok(level)
}

/// Adds a leaf everywhere (and an isolated vertex when `isolated`), keeping
/// one graph per forest code.
fn grow(level: &[Graph], isolated: bool) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut next = Vec::new();
    for g in level {
        let anchors: Vec<Option<usize>> = isolated
            .then_some(None)
            .into_iter()
            .chain(g.vertices().iter().map(Some))
            .collect();
        for anchor in anchors {
            let mut h = g.clone();
            let v = h.add_vertices(1)?;
            if let Some(u) = anchor {
                h.add_edge(u, v);
            }
            if seen.insert(forest_code(&h)) {
                next.push(h);
            }
        }
    }
    Ok(next)
}

/// Canonical code of a forest: sorted codes of its trees, each rooted at a
/// center.
pub fn forest_code(g: &Graph) -> String {
    let mut parts: Vec<String> = g
        .connected_components()
        .into_iter()
        .map(|c| tree_code(g, c))
        .collect();
    parts.sort();
    parts.concat()
}

fn tree_code(g: &Graph, comp: VertexSet) -> String {
    // peel leaves until one or two centers remain
    let mut rest = comp;
    while rest.len() > 2 {
        let leaves: VertexSet = rest
            .iter()
            .filter(|&v| g.neighbors(v).intersection(rest).len() <= 1)
            .collect();
        rest = rest.difference(leaves);
    }
    rest.iter()
        .map(|c| rooted_code(g, c, None, comp))
        .min()
        .unwrap_or_default()
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>, comp: VertexSet) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .intersection(comp)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v), comp))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs(n).unwrap().len(), count, "n={n}");
        }
        let connected = [1, 1, 2, 6, 21, 112];
        for (i, &count) in connected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).unwrap().len(), count);
        }
    }

    #[test]
    fn tree_and_forest_counts() {
        let t = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &count) in t.iter().enumerate() {
            let ts = trees(i + 1).unwrap();
            assert_eq!(ts.len(), count, "trees n={}", i + 1);
            assert!(ts.iter().all(|g| g.is_tree()));
        }
        let f = [1, 1, 2, 3, 6, 10, 20, 37, 76, 153];
        for (n, &count) in f.iter().enumerate() {
            let fs = forests(n).unwrap();
            assert_eq!(fs.len(), count, "forests n={n}");
            assert!(fs.iter().all(|g| g.is_forest()));
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (1, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
        assert_ne!(canonical_form(&Graph::cycle(6)), canonical_form(&Graph::path(6)));
        // regular graphs where refinement alone cannot split anything
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&two_triangles), canonical_form(&Graph::cycle(6)));
    }

    #[test]
    fn limits() {
        assert!(graphs(9).is_err());
        assert!(trees(17).is_err());
        assert!(trees(0).unwrap().is_empty());
    }
}
