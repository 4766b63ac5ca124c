//! Simple undirected graphs on `0..n`, `n <= 64`, with the structural
//! predicates the shellability theorems are conditioned on.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// A finite simple graph with dense bitset adjacency.
///
/// Adjacency is kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

/// Eccentricity-style distance that may be unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

/// Iterated simplicial-vertex strata `V_1, V_2, ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationLayers {
    pub layers: Vec<VertexSet>,
}

impl EliminationLayers {
    /// Union of all layers.
    pub fn covered(&self) -> VertexSet {
        self.layers
            .iter()
            .fold(VertexSet::EMPTY, |acc, l| acc.union(*l))
    }

    /// 1-based index `i` with `v` in `V_i`.
    pub fn layer_number(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v)).map(|i| i + 1)
    }

    /// `V_i` with 1-based `i`; empty past the last layer.
    pub fn layer(&self, i: usize) -> VertexSet {
        i.checked_sub(1)
            .and_then(|i| self.layers.get(i).copied())
            .unwrap_or_default()
    }
}

/// Cliques `B_1..B_n` chained so that `B_i ∩ B_{i+1} = {x_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePath {
    pub cliques: Vec<VertexSet>,
    pub connectors: Vec<usize>,
}

impl CliquePath {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.cliques
            .iter()
            .fold(VertexSet::EMPTY, |acc, b| acc.union(*b))
    }

    pub fn connector_set(&self) -> VertexSet {
        self.connectors.iter().copied().collect()
    }

    /// Checks the clique-path shape against `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = self.cliques.len();
        if n == 0 || self.connectors.len() + 1 != n {
            return false;
        }
        if !self.cliques.iter().all(|b| !b.is_empty() && g.is_clique(*b)) {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                let meet = self.cliques[i].intersection(self.cliques[j]);
                if j == i + 1 {
                    if meet != VertexSet::singleton(self.connectors[i]) {
                        return false;
                    }
                } else if !meet.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Biconnected decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks; isolated vertices form singleton blocks.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// Membership of a graph in the families the theorems talk about.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyFlags {
    pub is_forest: bool,
    pub is_tree: bool,
    pub is_chordal: bool,
    pub is_block_graph: bool,
    pub is_caterpillar: bool,
    pub is_lobster: bool,
    pub is_t1: bool,
    pub is_t2: bool,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics when `n` exceeds the 64-vertex limit; use [`Graph::from_edges`]
    /// for checked construction.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph {
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex(w));
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        g.add_clique(VertexSet::full(n));
        g
    }

    /// Path on `n` vertices `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn add_clique(&mut self, set: VertexSet) {
        for u in set {
            self.adj[u] = self.adj[u].union(set).without(u);
        }
    }

    /// Appends `k` isolated vertices, returning the first new index.
    pub(crate) fn add_vertices(&mut self, k: usize) -> Result<usize> {
        let first = self.adj.len();
        if first + k > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: first + k,
                limit: MAX_VERTICES,
            });
        }
        self.adj.extend(std::iter::repeat_n(VertexSet::EMPTY, k));
        Ok(first)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.adj.len())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbors of any vertex of `set`, outside `set`.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
            .difference(set)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// The component of `v` in `G[within]`; `v` must lie in `within`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self
                .boundary_union(frontier)
                .intersection(within)
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    fn boundary_union(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Whether `G[set]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.min() {
            None => true,
            Some(v) => self.component_within(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Components of `G[within]`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_within(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Connected components, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// `G[a]` relabeled to `0..|a|` in increasing order of original label,
    /// plus the map from new labels to old ones.
    pub fn induced_subgraph(&self, a: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(bad) = a.difference(self.vertices()).min() {
            return Err(Error::InvalidVertex(bad));
        }
        let map = a.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(a).map(|w| index[w]);
        }
        Ok((g, map))
    }

    /// `G \ U`, relabeled as in [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, u: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().difference(u))
            .expect("complement is in range")
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        for (v, &pv) in perm.iter().enumerate() {
            g.adj[pv] = self.adj[v].map(|w| perm[w]);
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.vertex_count();
        let mut g = self.clone();
        g.add_vertices(other.vertex_count())?;
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        Ok(g)
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Maximum distance over all vertex pairs.
    pub fn diameter(&self) -> Result<Distance> {
        if self.vertex_count() == 0 {
            return Err(Error::InvalidInput("diameter of the empty graph".into()));
        }
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Distance::Infinite),
                }
            }
        }
        Ok(Distance::Finite(best))
    }

    /// Vertices whose neighborhood induces a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        self.simplicial_within(self.vertices())
    }

    /// Simplicial vertices of `G[within]`.
    pub fn simplicial_within(&self, within: VertexSet) -> VertexSet {
        within
            .iter()
            .filter(|&v| {
                let nbrs = self.adj[v].intersection(within);
                nbrs.iter()
                    .all(|u| nbrs.without(u).is_subset(self.adj[u]))
            })
            .collect()
    }

    /// Repeatedly strips the simplicial vertices until none remain.
    pub fn elimination_layers(&self) -> EliminationLayers {
        let mut rest = self.vertices();
        let mut layers = Vec::new();
        while !rest.is_empty() {
            let layer = self.simplicial_within(rest);
            if layer.is_empty() {
                break;
            }
            rest = rest.difference(layer);
            layers.push(layer);
        }
        EliminationLayers { layers }
    }

    /// The set `S_v`: union of the largest cliques at `v` whose other
    /// vertices all sit in the first elimination layer, minus `v` itself.
    pub fn clique_shadow(&self, layers: &EliminationLayers, v: usize) -> Result<VertexSet> {
        if v >= self.vertex_count() {
            return Err(Error::InvalidVertex(v));
        }
        if !self.is_block_graph() {
            return Err(Error::InvalidInput("clique shadow needs a block graph".into()));
        }
        if layers.layer_number(v) != Some(2) {
            return Err(Error::InvalidInput(format!("vertex {v} is not in V_2")));
        }
        let first = layers.layer(1);
        let qualifying: Vec<VertexSet> = self
            .blocks()
            .blocks
            .into_iter()
            .filter(|b| b.contains(v) && b.len() >= 2 && b.without(v).is_subset(first))
            .collect();
        let Some(size) = qualifying.iter().map(|b| b.len()).max() else {
            return Err(Error::NoQualifyingClique(v));
        };
        Ok(qualifying
            .iter()
            .filter(|b| b.len() == size)
            .fold(VertexSet::EMPTY, |acc, b| acc.union(*b))
            .without(v))
    }

    /// Biconnected components and cut vertices.
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.vertex_count();
        let mut state = BlockSearch {
            g: self,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for v in 0..n {
            if state.disc[v] == usize::MAX {
                if self.adj[v].is_empty() {
                    state.disc[v] = state.time;
                    state.time += 1;
                    state.blocks.push(VertexSet::singleton(v));
                } else {
                    state.visit(v, usize::MAX);
                }
            }
        }
        let mut blocks = state.blocks;
        blocks.sort_by(|a, b| a.lex_cmp(*b));
        let mut count = [0u8; MAX_VERTICES];
        for b in &blocks {
            for v in *b {
                count[v] = count[v].saturating_add(1);
            }
        }
        let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
        BlockDecomposition {
            blocks,
            cut_vertices,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.is_connected() && self.is_forest()
    }

    /// Chordality through a maximum cardinality search ordering, checked as a
    /// perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        // visit order; its reverse is a PEO iff the graph is chordal
        let mut weight = vec![0usize; n];
        let mut numbered = VertexSet::EMPTY;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self
                .vertices()
                .difference(numbered)
                .iter()
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            visit.push(v);
            numbered.insert(v);
            for w in self.adj[v].difference(numbered) {
                weight[w] += 1;
            }
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in visit.iter().rev().enumerate() {
            pos[v] = i;
        }
        for v in 0..n {
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > pos[v]).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
                for &w in &later {
                    if w != parent && !self.has_edge(parent, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every block induces a complete graph.
    pub fn is_block_graph(&self) -> bool {
        self.blocks().blocks.iter().all(|b| self.is_clique(*b))
    }

    /// All family memberships at once.
    pub fn classify(&self) -> FamilyFlags {
        let is_forest = self.is_forest();
        let is_tree = is_forest && self.is_tree();
        let is_block_graph = self.is_block_graph();
        let (is_caterpillar, is_lobster) = if is_tree {
            self.caterpillar_lobster()
        } else {
            (false, false)
        };
        let (is_t1, is_t2) = if is_block_graph {
            self.t_families()
        } else {
            (false, false)
        };
        FamilyFlags {
            is_forest,
            is_tree,
            is_chordal: self.is_chordal(),
            is_block_graph,
            is_caterpillar,
            is_lobster,
            is_t1,
            is_t2,
        }
    }

    /// Every longest path of a tree, as vertex sequences.
    fn longest_tree_paths(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| self.distances_from(v)).collect();
        let diam = dist
            .iter()
            .flat_map(|row| row.iter().flatten())
            .copied()
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for a in 0..n {
            for b in a..n {
                if dist[a][b] == Some(diam) {
                    // walk from a towards b along strictly decreasing distance
                    let mut path = vec![a];
                    let mut cur = a;
                    while cur != b {
                        cur = self.adj[cur]
                            .iter()
                            .find(|&w| dist[w][b] < dist[cur][b])
                            .unwrap();
                        path.push(cur);
                    }
                    out.push(path);
                }
            }
        }
        out
    }

    fn caterpillar_lobster(&self) -> (bool, bool) {
        let n = self.vertex_count();
        let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| self.distances_from(v)).collect();
        let mut caterpillar = false;
        let mut lobster = false;
        for path in self.longest_tree_paths() {
            let k = path.len();
            let on_path: VertexSet = path.iter().copied().collect();
            // 1-based y_2..y_{k-1} and y_3..y_{k-2}
            let inner1 = if k >= 3 { &path[1..k - 1] } else { &path[0..0] };
            let inner2 = if k >= 5 { &path[2..k - 2] } else { &path[0..0] };
            let mut cat_ok = true;
            let mut lob_ok = true;
            for z in self.vertices().difference(on_path) {
                let near1 = inner1.iter().any(|&y| dist[z][y] == Some(1));
                let near2 = inner2.iter().any(|&y| dist[z][y] == Some(2));
                cat_ok &= near1;
                lob_ok &= near1 || near2;
            }
            caterpillar |= cat_ok;
            lobster |= lob_ok;
        }
        (caterpillar, lobster)
    }

    fn t_families(&self) -> (bool, bool) {
        let decomposition = self.blocks();
        let mut t1 = true;
        let mut t2 = true;
        for comp in self.connected_components() {
            let blocks: Vec<VertexSet> = decomposition
                .blocks
                .iter()
                .copied()
                .filter(|b| b.is_subset(comp))
                .collect();
            let paths = maximum_paths_among(&blocks);
            let mut c1 = false;
            let mut c2 = false;
            for p in &paths {
                let (a, b) = t_conditions(p, &blocks);
                c1 |= a;
                c2 |= b;
            }
            t1 &= c1;
            t2 &= c2;
        }
        (t1, t2)
    }

    /// All clique paths of maximum length built from blocks of a connected
    /// block graph, each listed once in its canonical orientation.
    pub fn maximum_clique_paths(&self) -> Result<Vec<CliquePath>> {
        if !self.is_connected() || self.vertex_count() == 0 || !self.is_block_graph() {
            return Err(Error::InvalidInput(
                "maximum clique paths need a connected block graph".into(),
            ));
        }
        Ok(maximum_paths_among(&self.blocks().blocks))
    }

    /// A maximum clique path with the canonical tie-break: smallest sorted
    /// connector list, then smallest block sequence.
    pub fn maximum_clique_path(&self) -> Result<CliquePath> {
        let mut paths = self.maximum_clique_paths()?;
        paths.sort_by(compare_clique_paths);
        Ok(paths.swap_remove(0))
    }

    /// Searches for an induced copy of `h`; the witness maps `V(h)` into `V(self)`.
    pub fn contains_induced(&self, h: &Graph) -> Option<Vec<usize>> {
        let k = h.vertex_count();
        if k > self.vertex_count() {
            return None;
        }
        if k == 0 {
            return Some(Vec::new());
        }
        // connectivity-first order over h
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::EMPTY;
        while order.len() < k {
            let next = h
                .vertices()
                .difference(placed)
                .iter()
                .max_by(|&a, &b| {
                    let ka = h.adj[a].intersection(placed).len();
                    let kb = h.adj[b].intersection(placed).len();
                    ka.cmp(&kb)
                        .then(h.degree(a).cmp(&h.degree(b)))
                        .then(b.cmp(&a))
                })
                .unwrap();
            order.push(next);
            placed.insert(next);
        }
        let mut map = vec![usize::MAX; k];
        if self.extend_embedding(h, &order, 0, VertexSet::EMPTY, &mut map) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_embedding(
        &self,
        h: &Graph,
        order: &[usize],
        depth: usize,
        used: VertexSet,
        map: &mut [usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        'candidates: for gv in self.vertices().difference(used) {
            if self.degree(gv) < h.degree(hv) {
                continue;
            }
            for &hp in &order[..depth] {
                if h.has_edge(hv, hp) != self.has_edge(gv, map[hp]) {
                    continue 'candidates;
                }
            }
            map[hv] = gv;
            if self.extend_embedding(h, order, depth + 1, used.with(gv), map) {
                return true;
            }
        }
        map[hv] = usize::MAX;
        false
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in self.g.adj[u] {
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

fn compare_clique_paths(a: &CliquePath, b: &CliquePath) -> Ordering {
    let mut sa = a.connectors.clone();
    let mut sb = b.connectors.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    sa.cmp(&sb)
        .then_with(|| a.connectors.cmp(&b.connectors))
        .then_with(|| {
            a.cliques
                .iter()
                .zip(&b.cliques)
                .map(|(x, y)| x.lex_cmp(*y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

/// Longest block sequences of a connected block graph's block-cut tree.
fn maximum_paths_among(blocks: &[VertexSet]) -> Vec<CliquePath> {
    let mut best: Vec<CliquePath> = Vec::new();
    let mut best_len = 0;
    for start in 0..blocks.len() {
        let mut trail = vec![start];
        let mut connectors = Vec::new();
        extend_block_path(blocks, &mut trail, &mut connectors, &mut |t, c| {
            if t.len() < best_len {
                return;
            }
            let forward = CliquePath {
                cliques: t.iter().map(|&i| blocks[i]).collect(),
                connectors: c.to_vec(),
            };
            let mut backward = forward.clone();
            backward.cliques.reverse();
            backward.connectors.reverse();
            let path = if compare_clique_paths(&backward, &forward).is_lt() {
                backward
            } else {
                forward
            };
            if t.len() > best_len {
                best_len = t.len();
                best.clear();
            }
            if !best.contains(&path) {
                best.push(path);
            }
        });
    }
    best.sort_by(compare_clique_paths);
    best
}

fn extend_block_path(
    blocks: &[VertexSet],
    trail: &mut Vec<usize>,
    connectors: &mut Vec<usize>,
    report: &mut dyn FnMut(&[usize], &[usize]),
) {
    report(trail, connectors);
    let last = *trail.last().unwrap();
    let used_cut = connectors.last().copied();
    for next in 0..blocks.len() {
        if trail.contains(&next) {
            continue;
        }
        let meet = blocks[last].intersection(blocks[next]);
        if meet.len() != 1 {
            continue;
        }
        let x = meet.min().unwrap();
        if Some(x) == used_cut {
            continue;
        }
        // non-consecutive blocks must stay disjoint
        if trail[..trail.len() - 1]
            .iter()
            .any(|&i| !blocks[i].is_disjoint(blocks[next]))
        {
            continue;
        }
        trail.push(next);
        connectors.push(x);
        extend_block_path(blocks, trail, connectors, report);
        trail.pop();
        connectors.pop();
    }
}

/// Evaluates the T1 and T2 clauses for one maximum clique path.
fn t_conditions(path: &CliquePath, blocks: &[VertexSet]) -> (bool, bool) {
    let on_path = path.vertices();
    let connectors = path.connector_set();
    let off: Vec<VertexSet> = blocks
        .iter()
        .copied()
        .filter(|b| !path.cliques.contains(b))
        .collect();
    let clause_a = |k: VertexSet| {
        let meet = k.intersection(on_path);
        meet.len() == 1 && meet.is_subset(connectors)
    };
    let t1 = off.iter().all(|&k| clause_a(k));
    let t2 = off.iter().all(|&k| {
        clause_a(k)
            || (k.is_disjoint(on_path)
                && off
                    .iter()
                    .any(|&k2| clause_a(k2) && k.intersection(k2).len() == 1))
    });
    (t1, t2)
}
