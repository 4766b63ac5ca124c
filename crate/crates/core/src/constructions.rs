//! Generators for the named graph families.
//!
//! Vertices added by a construction are numbered after the vertices of its
//! input, in attachment order. Every generator returns a [`LabeledGraph`]
//! whose labels follow the usual names (`x1`, `v3`, `a1`, ...).

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CliquePath, Graph};
use crate::vset::VertexSet;

/// A graph with a human-readable name per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    /// Index of the vertex called `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_set(&self, labels: &[&str]) -> Option<VertexSet> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn label_set(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.labels[v].as_str()).collect()
    }

    fn push(&mut self, k: usize, label: impl Fn(usize) -> String) -> Result<usize> {
        let first = self.graph.add_vertices(k)?;
        self.labels.extend((0..k).map(label));
        Ok(first)
    }
}

/// Pairwise disjoint cliques `W_1..W_k` covering the host, with a whisker
/// count `t_i` per part. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub parts: Vec<VertexSet>,
    pub whisker_counts: Vec<usize>,
}

impl CliquePartition {
    /// Singleton parts, `t` whiskers each.
    pub fn trivial(g: &Graph, t: usize) -> Self {
        CliquePartition {
            parts: g.vertices().iter().map(VertexSet::singleton).collect(),
            whisker_counts: vec![t; g.vertex_count()],
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.parts.len() != self.whisker_counts.len() {
            return Err(Error::InvalidPartition(
                "one whisker count per part is required".into(),
            ));
        }
        if let Some(i) = self.whisker_counts.iter().position(|&t| t == 0) {
            return Err(Error::InvalidPartition(format!("part {i} has no whiskers")));
        }
        let mut seen = VertexSet::EMPTY;
        for w in &self.parts {
            if !w.is_subset(g.vertices()) {
                return Err(Error::InvalidPartition(format!("{w} is not in the graph")));
            }
            if !w.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("{w} overlaps another part")));
            }
            if !g.is_clique(*w) {
                return Err(Error::InvalidPartition(format!("{w} is not a clique")));
            }
            seen = seen.union(*w);
        }
        if seen != g.vertices() {
            return Err(Error::InvalidPartition(format!(
                "parts miss {}",
                g.vertices().difference(seen)
            )));
        }
        Ok(())
    }

    /// The `r` of `G^π_r`: the smallest whisker count.
    pub fn r(&self) -> usize {
        self.whisker_counts.iter().copied().min().unwrap_or(0)
    }
}

/// Cliques of the given sizes (new vertices each) glued at a center `x`.
pub fn star_clique(clique_sizes: &[usize]) -> Result<LabeledGraph> {
    if clique_sizes.is_empty() {
        return Err(Error::InvalidInput("a star-clique needs at least one clique".into()));
    }
    let mut lg = LabeledGraph {
        graph: Graph::empty(1),
        labels: vec!["x".into()],
    };
    attach_cliques(&mut lg, 0, clique_sizes, "x")?;
    Ok(lg)
}

/// Adds one clique of `k` fresh vertices around `center` per entry of `sizes`.
fn attach_cliques(lg: &mut LabeledGraph, center: usize, sizes: &[usize], prefix: &str) -> Result<()> {
    for (i, &k) in sizes.iter().enumerate() {
        if k == 0 {
            return Err(Error::InvalidInput("clique sizes must be positive".into()));
        }
        let first = lg.push(k, |j| format!("{prefix}.{}.{}", i + 1, j + 1))?;
        let members: VertexSet = (first..first + k).collect();
        lg.graph.add_clique(members.with(center));
    }
    Ok(())
}

fn check_chain_sizes(sizes: &[usize]) -> Result<()> {
    if let Some(&k) = sizes.iter().find(|&&k| k < 2) {
        return Err(Error::InvalidInput(format!(
            "chained cliques need at least 2 vertices, got {k}"
        )));
    }
    Ok(())
}

/// `CP(B_1..B_n)`: cliques of the given sizes, consecutive ones sharing a
/// connector `x_i`.
pub fn clique_path(clique_sizes: &[usize]) -> Result<(LabeledGraph, CliquePath)> {
    if clique_sizes.is_empty() {
        return Err(Error::InvalidInput("a clique path needs a clique".into()));
    }
    check_chain_sizes(clique_sizes)?;
    let n = clique_sizes.len();
    let total: usize = clique_sizes.iter().sum::<usize>() + 1 - n;
    if total > crate::vset::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "clique path",
            size: total,
            limit: crate::vset::MAX_VERTICES,
        });
    }
    // connectors x_1..x_{n-1} first, then the private vertices of each clique
    let mut labels: Vec<String> = (1..n).map(|i| format!("x{i}")).collect();
    let mut g = Graph::empty(total);
    let mut cliques = Vec::with_capacity(n);
    let mut next = n - 1;
    for (i, &k) in clique_sizes.iter().enumerate() {
        let mut b = VertexSet::EMPTY;
        if i > 0 {
            b.insert(i - 1);
        }
        if i + 1 < n {
            b.insert(i);
        }
        let private = k - b.len();
        for j in 0..private {
            b.insert(next);
            labels.push(format!("b{}.{}", i + 1, j + 1));
            next += 1;
        }
        g.add_clique(b);
        cliques.push(b);
    }
    let path = CliquePath {
        cliques,
        connectors: (0..n - 1).collect(),
    };
    Ok((LabeledGraph { graph: g, labels }, path))
}

/// `CC(B_1..B_n)`: a cyclic chain of cliques, `B_i ∩ B_{i+1} = {x_i}` and
/// `B_n ∩ B_1 = {x_n}`. Returns the connectors in order.
pub fn clique_cycle(clique_sizes: &[usize]) -> Result<(LabeledGraph, Vec<usize>)> {
    let n = clique_sizes.len();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "a clique cycle needs at least 3 cliques, got {n}"
        )));
    }
    check_chain_sizes(clique_sizes)?;
    let total: usize = clique_sizes.iter().sum::<usize>() - n;
    if total > crate::vset::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "clique cycle",
            size: total,
            limit: crate::vset::MAX_VERTICES,
        });
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut g = Graph::empty(total);
    let mut next = n;
    for (i, &k) in clique_sizes.iter().enumerate() {
        // B_{i+1} holds x_i (shared with the previous clique) and x_{i+1}
        let mut b = VertexSet::from([(i + n - 1) % n, i]);
        for j in 0..k - 2 {
            b.insert(next);
            labels.push(format!("b{}.{}", i + 1, j + 1));
            next += 1;
        }
        g.add_clique(b);
    }
    Ok((LabeledGraph { graph: g, labels }, (0..n).collect()))
}

/// `G(r)`: a clique cycle with star-cliques attached at some connectors.
/// `attachments` pairs a connector position (0-based) with the clique sizes
/// of its star-clique; at least one star-clique must have `r + 1` vertices.
pub fn clique_cycle_graph(
    clique_sizes: &[usize],
    attachments: &[(usize, Vec<usize>)],
    r: usize,
) -> Result<LabeledGraph> {
    let (mut lg, connectors) = clique_cycle(clique_sizes)?;
    if attachments.is_empty() {
        return Err(Error::InvalidInput("no connector carries a star-clique".into()));
    }
    let mut used = VertexSet::EMPTY;
    let mut big_enough = false;
    for (pos, sizes) in attachments {
        let Some(&x) = connectors.get(*pos) else {
            return Err(Error::InvalidInput(format!("no connector at position {pos}")));
        };
        if used.contains(x) {
            return Err(Error::InvalidInput(format!("connector {pos} listed twice")));
        }
        used.insert(x);
        big_enough |= 1 + sizes.iter().sum::<usize>() > r;
        let prefix = lg.labels[x].clone();
        attach_cliques(&mut lg, x, sizes, &prefix)?;
    }
    if !big_enough {
        return Err(Error::InvalidInput(format!(
            "no attached star-clique has at least {} vertices",
            r + 1
        )));
    }
    Ok(lg)
}

/// `CCG(H, S, r)`: attaches to each `x ∈ S` (in increasing order) a
/// star-clique with clique sizes `sizes[i]`, each with at least `r + 1`
/// vertices. With `require_cover`, `S` must be a vertex cover of `h`.
pub fn attach_star_cliques(
    h: &Graph,
    s: VertexSet,
    r: usize,
    sizes: &[Vec<usize>],
    require_cover: bool,
) -> Result<LabeledGraph> {
    if !s.is_subset(h.vertices()) {
        return Err(Error::InvalidVertex(s.difference(h.vertices()).min().unwrap()));
    }
    if require_cover && !is_vertex_cover(h, s) {
        return Err(Error::NotAVertexCover(s));
    }
    if sizes.len() != s.len() {
        return Err(Error::InvalidInput(format!(
            "{} star-cliques given for {} vertices",
            sizes.len(),
            s.len()
        )));
    }
    let mut lg = LabeledGraph::unlabeled(h.clone());
    for (x, sc) in s.iter().zip(sizes) {
        if sc.is_empty() || 1 + sc.iter().sum::<usize>() < r + 1 {
            return Err(Error::InvalidInput(format!(
                "star-clique at {x} has fewer than {} vertices",
                r + 1
            )));
        }
        attach_cliques(&mut lg, x, sc, &format!("{x}"))?;
    }
    Ok(lg)
}

/// `CCG(H, S, r)` with the smallest star-cliques: one `K_{r+1}` per vertex.
pub fn attach_minimal_star_cliques(h: &Graph, s: VertexSet, r: usize) -> Result<LabeledGraph> {
    let sizes = vec![vec![r.max(1)]; s.len()];
    attach_star_cliques(h, s, r, &sizes, false)
}

/// `W(H)`: one pendant vertex at every vertex.
pub fn whiskered(h: &Graph) -> Result<LabeledGraph> {
    attach_minimal_star_cliques(h, h.vertices(), 1)
}

pub fn is_vertex_cover(h: &Graph, s: VertexSet) -> bool {
    h.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
}

/// `G^π_r`: each part `W_i` gets `t_i` fresh vertices and `W_i` together
/// with them is completed to a clique.
pub fn clique_whisker(g: &Graph, p: &CliquePartition) -> Result<LabeledGraph> {
    p.validate(g)?;
    let mut lg = LabeledGraph::unlabeled(g.clone());
    for (i, (w, &t)) in p.parts.iter().zip(&p.whisker_counts).enumerate() {
        let first = lg.push(t, |j| format!("x{}.{}", i + 1, j + 1))?;
        let fresh: VertexSet = (first..first + t).collect();
        lg.graph.add_clique(w.union(fresh));
    }
    Ok(lg)
}

/// The tree counterexample family: the spider on `v1..v7` (center `v1`,
/// legs `v2v3`, `v4v5`, `v6v7`) with `H_1, H_2, H_3` hung from `v3, v5, v7`
/// through their vertex 0.
pub fn counterexample_gt(r: usize, h: [&Graph; 3]) -> Result<LabeledGraph> {
    if r < 4 {
        return Err(Error::InvalidInput(format!("r must be at least 4, got {r}")));
    }
    for (i, hi) in h.iter().enumerate() {
        if hi.vertex_count() < r - 3 || hi.vertex_count() == 0 {
            return Err(Error::InvalidInput(format!(
                "H{} needs at least {} vertices",
                i + 1,
                (r - 3).max(1)
            )));
        }
    }
    let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?;
    let mut lg = LabeledGraph {
        graph: spider,
        labels: (1..=7).map(|i| format!("v{i}")).collect(),
    };
    for (i, (hi, anchor)) in h.iter().zip([2, 4, 6]).enumerate() {
        let first = lg.push(hi.vertex_count(), |j| {
            if j == 0 {
                format!("u{}", i + 1)
            } else {
                format!("h{}.{}", i + 1, j + 1)
            }
        })?;
        for (a, b) in hi.edges() {
            lg.graph.add_edge(first + a, first + b);
        }
        lg.graph.add_edge(anchor, first);
    }
    Ok(lg)
}

/// [`counterexample_gt`] with every `H_i` a path on `t` vertices.
pub fn counterexample_gt_paths(r: usize, t: usize) -> Result<LabeledGraph> {
    let p = Graph::path(t);
    counterexample_gt(r, [&p, &p, &p])
}

/// The sharpness family for the chordal attachment bound.
#[derive(Clone, Debug)]
pub struct SheHigher {
    pub h: LabeledGraph,
    pub g: LabeledGraph,
    /// `n·t + n`.
    pub r: usize,
    /// Everything but `a1, b1, c, d`.
    pub contracted: VertexSet,
    /// `a1, c, b1, d` in cyclic order.
    pub cycle: [usize; 4],
}

/// `H` is two `n`-vertex paths `a_*`, `b_*` whose first vertices are both
/// joined to the adjacent pair `c, d`; `G` attaches one `K_{t+1}` to every
/// vertex of `H`.
pub fn she_higher_family(n: usize, t: usize) -> Result<SheHigher> {
    if n < 2 || t < 1 {
        return Err(Error::InvalidInput(format!(
            "need n >= 2 and t >= 1, got n={n}, t={t}"
        )));
    }
    let (c, d) = (2 * n, 2 * n + 1);
    let mut h = Graph::empty(2 * n + 2);
    for i in 0..n - 1 {
        h.add_edge(i, i + 1);
        h.add_edge(n + i, n + i + 1);
    }
    for (u, v) in [(0, c), (0, d), (n, c), (n, d), (c, d)] {
        h.add_edge(u, v);
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    labels.extend((1..=n).map(|i| format!("b{i}")));
    labels.extend(["c".to_string(), "d".to_string()]);
    let h = LabeledGraph { graph: h, labels };
    let mut g = h.clone();
    for x in 0..2 * n + 2 {
        let prefix = g.labels[x].clone();
        attach_cliques(&mut g, x, &[t], &prefix)?;
    }
    let kept = VertexSet::from([0, n, c, d]);
    Ok(SheHigher {
        contracted: g.graph.vertices().difference(kept),
        cycle: [0, c, n, d],
        r: n * t + n,
        h,
        g,
    })
}

/// The forbidden graph for the `r = 3` block-graph result: a triangle
/// `x3x4x5` with pendant paths `x3x2x1`, `x5x6x7`, `x4x8x9`.
pub fn t3_graph() -> LabeledGraph {
    let edges = [
        (1, 2),
        (2, 3),
        (3, 4),
        (3, 5),
        (4, 5),
        (5, 6),
        (6, 7),
        (4, 8),
        (8, 9),
    ];
    let shifted: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    LabeledGraph {
        graph: Graph::from_edges(9, &shifted).unwrap(),
        labels: (1..=9).map(|i| format!("x{i}")).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Tree,
    BlockGraph,
    T1,
    T2,
    Chordal,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "tree" => Ok(FamilyKind::Tree),
            "block" | "block_graph" => Ok(FamilyKind::BlockGraph),
            "t1" => Ok(FamilyKind::T1),
            "t2" => Ok(FamilyKind::T2),
            "chordal" => Ok(FamilyKind::Chordal),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Tree => "tree",
            FamilyKind::BlockGraph => "block_graph",
            FamilyKind::T1 => "T1",
            FamilyKind::T2 => "T2",
            FamilyKind::Chordal => "chordal",
        })
    }
}

impl FamilyKind {
    pub fn recognizes(self, g: &Graph) -> bool {
        let flags = g.classify();
        match self {
            FamilyKind::Tree => flags.is_tree,
            FamilyKind::BlockGraph => flags.is_block_graph && g.is_connected(),
            FamilyKind::T1 => flags.is_t1 && g.is_connected(),
            FamilyKind::T2 => flags.is_t2 && g.is_connected(),
            FamilyKind::Chordal => flags.is_chordal,
        }
    }
}

/// A connected member of the family on exactly `n` vertices, determined by
/// `(kind, n, seed)` and checked by the family recognizer.
pub fn random_family(kind: FamilyKind, n: usize, seed: u64) -> Graph {
    assert!((1..=crate::vset::MAX_VERTICES).contains(&n), "n out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = match kind {
            FamilyKind::Tree => random_tree(n, &mut rng),
            FamilyKind::BlockGraph => random_block_graph(n, &mut rng),
            FamilyKind::T1 => random_t_graph(n, false, &mut rng),
            FamilyKind::T2 => random_t_graph(n, true, &mut rng),
            FamilyKind::Chordal => random_chordal(n, &mut rng),
        };
        if kind.recognizes(&g) {
            return g;
        }
    }
}

/// Uniform labeled tree via a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, c);
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]);
    g
}

/// Grows a connected block graph by gluing small cliques at random vertices.
pub fn random_block_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(1);
    while g.vertex_count() < n {
        let at = rng.gen_range(0..g.vertex_count());
        let k = rng.gen_range(1..=(n - g.vertex_count()).min(3));
        let first = g.add_vertices(k).unwrap();
        g.add_clique((first..first + k).collect::<VertexSet>().with(at));
    }
    g
}

/// Grows a connected chordal graph by adding simplicial vertices.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(1);
    while g.vertex_count() < n {
        let at = rng.gen_range(0..g.vertex_count());
        let mut clique = VertexSet::singleton(at);
        let mut candidates = g.neighbors(at).to_vec();
        candidates.shuffle(rng);
        for w in candidates {
            if rng.gen_bool(0.5) && clique.is_subset(g.neighbors(w)) {
                clique.insert(w);
            }
        }
        let v = g.add_vertices(1).unwrap();
        g.add_clique(clique.with(v));
    }
    g
}

/// A clique path with cliques hung at its connectors; with `second_level`,
/// further cliques hang off the private vertices of those.
fn random_t_graph(n: usize, second_level: bool, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(1);
    let mut end = 0;
    // the spine B_1..B_m; `connectors` holds x_1..x_{m-1}
    let mut connectors: Vec<usize> = Vec::new();
    let mut m = 0;
    while g.vertex_count() < n {
        if m >= 2 && rng.gen_bool(0.35) {
            break;
        }
        if m >= 1 {
            connectors.push(end);
        }
        let k = rng.gen_range(1..=(n - g.vertex_count()).min(2));
        let first = g.add_vertices(k).unwrap();
        g.add_clique((first..first + k).collect::<VertexSet>().with(end));
        end = first + k - 1;
        m += 1;
    }
    // private vertices of first-level cliques, with the 0-based connector index
    let mut hangers: Vec<(usize, usize)> = Vec::new();
    while g.vertex_count() < n {
        let k = rng.gen_range(1..=(n - g.vertex_count()).min(2));
        let deep = second_level && !hangers.is_empty() && rng.gen_bool(0.4);
        let at = if deep {
            let (y, pos) = hangers[rng.gen_range(0..hangers.len())];
            // only below cliques hung at x_2..x_{m-2}
            if pos < 1 || pos + 3 > m {
                continue;
            }
            y
        } else {
            connectors[rng.gen_range(0..connectors.len())]
        };
        let first = g.add_vertices(k).unwrap();
        g.add_clique((first..first + k).collect::<VertexSet>().with(at));
        if !deep {
            let pos = connectors.iter().position(|&c| c == at).unwrap();
            hangers.extend((first..first + k).map(|v| (v, pos)));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Distance;

    #[test]
    fn star_clique_examples() {
        assert_eq!(star_clique(&[1]).unwrap().graph, Graph::complete(2));
        let g = star_clique(&[2, 2]).unwrap().graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert_eq!(g.blocks().cut_vertices, VertexSet::singleton(0));
        let g = star_clique(&[1, 1, 1]).unwrap().graph;
        assert_eq!(g.degree(0), 3);
        assert!(g.is_tree());
        assert!(star_clique(&[2, 0]).is_err());
        assert!(star_clique(&[]).is_err());
    }

    #[test]
    fn clique_path_examples() {
        let (lg, p) = clique_path(&[2, 2, 2]).unwrap();
        assert!(lg.graph.is_tree() && lg.graph.diameter().unwrap() == Distance::Finite(3));
        assert!(p.is_valid_in(&lg.graph));
        let (lg, _) = clique_path(&[5]).unwrap();
        assert_eq!(lg.graph, Graph::complete(5));
        let (lg, p) = clique_path(&[4, 3, 2, 6, 3]).unwrap();
        assert_eq!(lg.graph.vertex_count(), 14);
        assert_eq!(p.connectors.len(), 4);
        assert!(p.is_valid_in(&lg.graph));
        assert_eq!(lg.graph.maximum_clique_path().unwrap().len(), 5);
        assert!(clique_path(&[2, 1]).is_err());
    }

    #[test]
    fn clique_cycle_examples() {
        let (lg, xs) = clique_cycle(&[2, 2, 2, 2]).unwrap();
        assert_eq!(xs.len(), 4);
        assert_eq!(lg.graph, Graph::cycle(4));
        let (lg, _) = clique_cycle(&[3, 3, 3]).unwrap();
        assert_eq!(lg.graph.vertex_count(), 6);
        assert_eq!(lg.graph.edge_count(), 9);
        assert!(clique_cycle(&[2, 2]).is_err());
    }

    #[test]
    fn clique_cycle_graph_checks_one_large_attachment() {
        let g = clique_cycle_graph(&[2, 3, 2], &[(0, vec![1]), (2, vec![2])], 2).unwrap();
        assert_eq!(g.graph.vertex_count(), 4 + 3);
        assert!(clique_cycle_graph(&[2, 3, 2], &[(0, vec![1])], 2).is_err());
        assert!(clique_cycle_graph(&[2, 3, 2], &[], 1).is_err());
        assert!(clique_cycle_graph(&[2, 3, 2], &[(5, vec![1])], 1).is_err());
    }

    #[test]
    fn attach_star_cliques_examples() {
        let c4 = Graph::cycle(4);
        let w = attach_star_cliques(&c4, c4.vertices(), 1, &[vec![1], vec![1], vec![1], vec![1]], true)
            .unwrap();
        assert_eq!(w.graph.vertex_count(), 8);
        assert_eq!(w.graph, whiskered(&c4).unwrap().graph);
        let half = attach_star_cliques(&c4, VertexSet::from([0, 2]), 1, &[vec![1], vec![1]], true).unwrap();
        assert_eq!(half.graph.vertex_count(), 6);
        assert!(matches!(
            attach_star_cliques(&c4, VertexSet::from([0]), 1, &[vec![1]], true),
            Err(Error::NotAVertexCover(_))
        ));
        assert!(attach_star_cliques(&c4, VertexSet::from([0]), 2, &[vec![1]], false).is_err());
    }

    #[test]
    fn clique_whisker_examples() {
        let c4 = Graph::cycle(4);
        let trivial = clique_whisker(&c4, &CliquePartition::trivial(&c4, 1)).unwrap();
        assert_eq!(trivial.graph, whiskered(&c4).unwrap().graph);
        let k2 = Graph::complete(2);
        let p = CliquePartition {
            parts: vec![VertexSet::from([0, 1])],
            whisker_counts: vec![2],
        };
        assert_eq!(clique_whisker(&k2, &p).unwrap().graph, Graph::complete(4));
        let bad = CliquePartition {
            parts: vec![VertexSet::from([0, 2]), VertexSet::from([1]), VertexSet::from([3])],
            whisker_counts: vec![1, 1, 1],
        };
        assert!(matches!(clique_whisker(&c4, &bad), Err(Error::InvalidPartition(_))));
        let with_empty = CliquePartition {
            parts: vec![VertexSet::from([0, 1]), VertexSet::EMPTY],
            whisker_counts: vec![1, 2],
        };
        let g = clique_whisker(&k2, &with_empty).unwrap().graph;
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn counterexample_examples() {
        let k1 = Graph::empty(1);
        let g = counterexample_gt(4, [&k1, &k1, &k1]).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (10, 9));
        assert!(g.graph.is_tree());
        assert_eq!(g.vertex("u2"), Some(8));
        assert!(g.graph.has_edge(g.vertex("v5").unwrap(), 8));
        let p2 = Graph::path(2);
        assert_eq!(counterexample_gt(5, [&p2, &p2, &p2]).unwrap().graph.vertex_count(), 13);
        assert!(counterexample_gt(4, [&Graph::empty(0), &k1, &k1]).is_err());
        assert!(counterexample_gt(6, [&k1, &k1, &k1]).is_err());
        assert!(counterexample_gt(3, [&k1, &k1, &k1]).is_err());
    }

    #[test]
    fn she_higher_examples() {
        let f = she_higher_family(2, 1).unwrap();
        assert_eq!(f.h.graph.vertex_count(), 6);
        assert_eq!(f.g.graph.vertex_count(), 12);
        assert_eq!(f.r, 4);
        assert!(f.h.graph.is_chordal());
        assert_eq!(f.contracted.len(), 8);
        let f = she_higher_family(2, 2).unwrap();
        assert_eq!((f.g.graph.vertex_count(), f.r), (18, 6));
        assert!(she_higher_family(1, 1).is_err());
    }

    #[test]
    fn t3_examples() {
        let t3 = t3_graph();
        let g = &t3.graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 9));
        let deg3: Vec<&str> = t3.label_set(
            g.vertices().iter().filter(|&v| g.degree(v) == 3).collect(),
        );
        assert_eq!(deg3, vec!["x3", "x4", "x5"]);
        assert_eq!(g.diameter().unwrap(), Distance::Finite(5));
    }

    #[test]
    fn random_families_are_recognized_and_reproducible() {
        for kind in [
            FamilyKind::Tree,
            FamilyKind::BlockGraph,
            FamilyKind::T1,
            FamilyKind::T2,
            FamilyKind::Chordal,
        ] {
            for n in 1..=10 {
                for seed in 0..20 {
                    let g = random_family(kind, n, seed);
                    assert_eq!(g.vertex_count(), n);
                    assert!(kind.recognizes(&g), "{kind} n={n} seed={seed}");
                    assert_eq!(g, random_family(kind, n, seed));
                }
            }
        }
        assert!(random_family(FamilyKind::Tree, 7, 42).is_forest());
        assert!(random_family(FamilyKind::BlockGraph, 8, 7).is_block_graph());
        assert!(random_family(FamilyKind::T1, 9, 1).classify().is_t1);
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("block-graph".parse::<FamilyKind>().unwrap(), FamilyKind::BlockGraph);
        assert_eq!("T2".parse::<FamilyKind>().unwrap(), FamilyKind::T2);
        assert!("lobster".parse::<FamilyKind>().is_err());
    }
}
