//! Shellability of nonpure simplicial complexes.
//!
//! An order `F_1, .., F_t` of the facets is a shelling when every
//! `<F_k> ∩ <F_1, .., F_{k-1}>` is pure of dimension `dim F_k - 1`. The
//! checker works with the equivalent pairwise form: for all `i < k` there is
//! a `j < k` with `F_k ∩ F_i ⊆ F_k ∩ F_j` and `|F_k \ F_j| = 1`.
//!
//! [`is_shellable`] first tries to build a shelling from a shedding-vertex
//! decomposition, then falls back to an exhaustive prefix search. Only the
//! prefix search ever answers [`ShellDecision::NotShellable`].

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Largest facet count [`brute_force_shellable`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// A facet order claimed to be a shelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub order: Vec<VertexSet>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellDecision {
    Shellable(ShellingCertificate),
    NotShellable { nodes: u64 },
    /// The node budget ran out before the search finished.
    Unknown { nodes: u64 },
}

impl ShellDecision {
    pub fn is_shellable(&self) -> bool {
        matches!(self, ShellDecision::Shellable(_))
    }

    pub fn is_not_shellable(&self) -> bool {
        matches!(self, ShellDecision::NotShellable { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ShellDecision::Unknown { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ShellDecision::Shellable(_) => "Shellable",
            ShellDecision::NotShellable { .. } => "NotShellable",
            ShellDecision::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShellingOptions {
    /// Node limit shared by both search phases.
    pub budget: u64,
    /// Try the shedding-vertex construction before the prefix search.
    pub decomposition_first: bool,
}

impl Default for ShellingOptions {
    fn default() -> Self {
        ShellingOptions {
            budget: crate::default_budget(),
            decomposition_first: true,
        }
    }
}

fn check_permutation(d: &SimplicialComplex, order: &[VertexSet]) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort_by(|a, b| a.canonical_cmp(*b));
    if sorted.as_slice() != d.facets() {
        return Err(Error::InvalidOrder(
            "order is not a permutation of the facets".into(),
        ));
    }
    Ok(())
}

/// Pairwise criterion for appending `f` after `prefix`.
#[inline]
pub(crate) fn attaches(f: VertexSet, prefix: impl Iterator<Item = VertexSet> + Clone) -> bool {
    // vertices x such that F \ {x} is F ∩ F_j for some earlier F_j
    let mut droppable = VertexSet::EMPTY;
    let mut any = false;
    for p in prefix.clone() {
        any = true;
        let meet = f.intersection(p);
        if meet.len() + 1 == f.len() {
            droppable = droppable.union(f.difference(meet));
        }
    }
    if !any {
        return true;
    }
    prefix.into_iter().all(|p| !droppable.difference(f.intersection(p)).is_empty())
}

/// Checks `order` with the pairwise criterion.
pub fn verify_shelling(d: &SimplicialComplex, order: &[VertexSet]) -> Result<bool> {
    check_permutation(d, order)?;
    Ok((1..order.len()).all(|k| attaches(order[k], order[..k].iter().copied())))
}

/// Checks `order` straight from the definition: the maximal faces of
/// `<F_k> ∩ <F_1..F_{k-1}>` must all have exactly `|F_k| - 1` vertices.
pub fn verify_shelling_by_definition(d: &SimplicialComplex, order: &[VertexSet]) -> Result<bool> {
    check_permutation(d, order)?;
    Ok(definition_holds(order))
}

fn definition_holds(order: &[VertexSet]) -> bool {
    for k in 1..order.len() {
        let f = order[k];
        let meets: Vec<VertexSet> = order[..k].iter().map(|p| f.intersection(*p)).collect();
        let maximal = crate::vset::maximal_sets(meets);
        if maximal.iter().any(|m| m.len() + 1 != f.len()) {
            return false;
        }
    }
    true
}

/// Decides shellability with the default options and the given node budget.
pub fn is_shellable(d: &SimplicialComplex, budget: u64) -> ShellDecision {
    is_shellable_with(
        d,
        &ShellingOptions {
            budget,
            ..ShellingOptions::default()
        },
    )
}

pub fn is_shellable_with(d: &SimplicialComplex, opts: &ShellingOptions) -> ShellDecision {
    if d.facet_count() <= 1 {
        return ShellDecision::Shellable(ShellingCertificate {
            order: d.facets().to_vec(),
            verified: true,
        });
    }
    let mut spent = 0;
    if opts.decomposition_first {
        let mut dec = Decomposer {
            nodes: 0,
            budget: opts.budget / 2,
            memo: HashMap::new(),
        };
        let found = dec.shell(d.facets());
        spent = dec.nodes;
        if let Some(order) = found {
            // the construction is only a heuristic; keep it if it checks out
            if verify_shelling(d, &order).unwrap_or(false) {
                return ShellDecision::Shellable(ShellingCertificate {
                    order,
                    verified: true,
                });
            }
        }
    }
    prefix_search(d, opts.budget.saturating_sub(spent))
}

/// Exhaustive prefix search over dimension-nonincreasing facet orders.
///
/// Any shelling stays a shelling when its facets are stably re-sorted by
/// decreasing dimension, so restricting to such orders loses nothing.
/// Prefixes are memoized as sets: completability only depends on which
/// facets are already placed.
pub fn prefix_search(d: &SimplicialComplex, budget: u64) -> ShellDecision {
    let mut facets = d.facets().to_vec();
    if facets.len() <= 1 {
        return ShellDecision::Shellable(ShellingCertificate {
            order: facets,
            verified: true,
        });
    }
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(*b)));
    let mut search = PrefixSearch {
        words: facets.len().div_ceil(64),
        facets,
        nodes: 0,
        budget,
        failed: HashSet::new(),
        order: Vec::new(),
    };
    let mut placed = vec![0u64; search.words];
    match search.dfs(&mut placed) {
        Step::Found => {
            let order: Vec<VertexSet> = search.order.iter().map(|&i| search.facets[i]).collect();
            let verified = verify_shelling(d, &order).unwrap_or(false);
            debug_assert!(verified);
            ShellDecision::Shellable(ShellingCertificate { order, verified })
        }
        Step::Exhausted => ShellDecision::NotShellable {
            nodes: search.nodes,
        },
        Step::OutOfBudget => ShellDecision::Unknown {
            nodes: search.nodes,
        },
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct PrefixSearch {
    facets: Vec<VertexSet>,
    words: usize,
    nodes: u64,
    budget: u64,
    failed: HashSet<Vec<u64>>,
    order: Vec<usize>,
}

impl PrefixSearch {
    fn is_placed(placed: &[u64], i: usize) -> bool {
        placed[i / 64] >> (i % 64) & 1 == 1
    }

    fn dfs(&mut self, placed: &mut Vec<u64>) -> Step {
        if self.order.len() == self.facets.len() {
            return Step::Found;
        }
        if self.failed.contains(placed) {
            return Step::Exhausted;
        }
        let first_free = (0..self.facets.len())
            .find(|&i| !Self::is_placed(placed, i))
            .unwrap();
        let size = self.facets[first_free].len();
        for i in first_free..self.facets.len() {
            if self.facets[i].len() != size {
                break;
            }
            if Self::is_placed(placed, i) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let f = self.facets[i];
            let facets = &self.facets;
            if !attaches(f, self.order.iter().map(|&j| facets[j])) {
                continue;
            }
            placed[i / 64] |= 1 << (i % 64);
            self.order.push(i);
            match self.dfs(placed) {
                Step::Exhausted => {}
                other => return other,
            }
            self.order.pop();
            placed[i / 64] &= !(1 << (i % 64));
        }
        debug_assert_eq!(placed.len(), self.words);
        self.failed.insert(placed.clone());
        Step::Exhausted
    }
}

/// Builds shellings from shedding vertices: if no facet of `lk(v)` is a
/// facet of `del(v)`, a shelling of `del(v)` followed by `v` joined to a
/// shelling of `lk(v)` shells the whole complex.
struct Decomposer {
    nodes: u64,
    budget: u64,
    memo: HashMap<Vec<u64>, Option<Vec<VertexSet>>>,
}

impl Decomposer {
    fn shell(&mut self, facets: &[VertexSet]) -> Option<Vec<VertexSet>> {
        if facets.len() <= 1 {
            return Some(facets.to_vec());
        }
        let key: Vec<u64> = facets.iter().map(|f| f.bits()).collect();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let result = self.shell_uncached(facets);
        self.memo.insert(key, result.clone());
        result
    }

    fn shell_uncached(&mut self, facets: &[VertexSet]) -> Option<Vec<VertexSet>> {
        let common = facets
            .iter()
            .fold(facets[0], |acc, f| acc.intersection(*f));
        if let Some(apex) = common.min() {
            let link: Vec<VertexSet> = canonical(facets.iter().map(|f| f.without(apex)));
            return self
                .shell(&link)
                .map(|order| order.into_iter().map(|f| f.with(apex)).collect());
        }
        let support = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        for v in support {
            let (with, without): (Vec<VertexSet>, Vec<VertexSet>) =
                facets.iter().partition(|f| f.contains(v));
            let shedding = with
                .iter()
                .all(|f| without.iter().any(|g| f.without(v).is_subset(*g)));
            if !shedding {
                continue;
            }
            let link = canonical(with.iter().map(|f| f.without(v)));
            let Some(del_order) = self.shell(&without) else {
                if self.nodes > self.budget {
                    return None;
                }
                continue;
            };
            let Some(link_order) = self.shell(&link) else {
                if self.nodes > self.budget {
                    return None;
                }
                continue;
            };
            let mut order = del_order;
            order.extend(link_order.into_iter().map(|f| f.with(v)));
            return Some(order);
        }
        None
    }
}

fn canonical(items: impl Iterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = items.collect();
    crate::vset::canonicalize(&mut v);
    v
}

/// Independent oracle: tries every facet permutation against the definition.
pub fn brute_force_shellable(d: &SimplicialComplex) -> Result<ShellDecision> {
    let t = d.facet_count();
    if t > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "facet list",
            size: t,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let facets = d.facets();
    let mut perm: Vec<usize> = (0..t).collect();
    let mut tried = 0u64;
    loop {
        tried += 1;
        let order: Vec<VertexSet> = perm.iter().map(|&i| facets[i]).collect();
        if definition_holds(&order) {
            return Ok(ShellDecision::Shellable(ShellingCertificate {
                order,
                verified: true,
            }));
        }
        if !next_permutation(&mut perm) {
            return Ok(ShellDecision::NotShellable { nodes: tried });
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ind_r_complex;
    use crate::graph::Graph;

    fn complex(facets: &[&[usize]]) -> SimplicialComplex {
        let fs: Vec<VertexSet> = facets.iter().map(|f| VertexSet::from(*f)).collect();
        let ground = fs.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        SimplicialComplex::new(ground, fs).unwrap()
    }

    #[test]
    fn verify_examples() {
        let two_diagonals = complex(&[&[1, 3], &[2, 4]]);
        for order in [
            vec![VertexSet::from([1, 3]), VertexSet::from([2, 4])],
            vec![VertexSet::from([2, 4]), VertexSet::from([1, 3])],
        ] {
            assert!(!verify_shelling(&two_diagonals, &order).unwrap());
            assert!(!verify_shelling_by_definition(&two_diagonals, &order).unwrap());
        }
        let single = complex(&[&[0, 1, 2]]);
        assert!(verify_shelling(&single, single.facets()).unwrap());
        let chain = complex(&[&[1, 2], &[2, 3]]);
        assert!(verify_shelling(&chain, chain.facets()).unwrap());
        assert!(matches!(
            verify_shelling(&chain, &[VertexSet::from([1, 2])]),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn nonpure_orders() {
        // a triangle followed by a disjoint point: intersection is {∅},
        // pure of dimension -1 as required for a 0-dimensional facet
        let d = complex(&[&[0, 1, 2], &[3]]);
        let good = [VertexSet::from([0, 1, 2]), VertexSet::from([3])];
        let bad = [VertexSet::from([3]), VertexSet::from([0, 1, 2])];
        assert!(verify_shelling(&d, &good).unwrap());
        assert!(verify_shelling_by_definition(&d, &good).unwrap());
        assert!(!verify_shelling(&d, &bad).unwrap());
        assert!(!verify_shelling_by_definition(&d, &bad).unwrap());
        // an edge hanging off a triangle shells only after the triangle
        let d = complex(&[&[0, 1, 2], &[2, 3]]);
        assert!(!verify_shelling(&d, d.facets()).unwrap());
        match is_shellable(&d, 1000) {
            ShellDecision::Shellable(c) => assert_eq!(c.order[0], VertexSet::from([0, 1, 2])),
            other => panic!("{other:?}"),
        }
        // two triangles meeting in a vertex are not
        let d = complex(&[&[0, 1, 2], &[2, 3, 4]]);
        assert!(prefix_search(&d, 1000).is_not_shellable());
        assert!(is_shellable(&d, 1000).is_not_shellable());
    }

    #[test]
    fn search_examples() {
        let c4 = ind_r_complex(&Graph::cycle(4), 1);
        assert!(is_shellable(&c4, 1000).is_not_shellable());
        let full = SimplicialComplex::simplex(VertexSet::full(4));
        match is_shellable(&full, 10) {
            ShellDecision::Shellable(c) => assert_eq!(c.order, vec![VertexSet::full(4)]),
            other => panic!("{other:?}"),
        }
        let void = SimplicialComplex::void(VertexSet::EMPTY);
        assert!(is_shellable(&void, 1).is_shellable());
        let empty = SimplicialComplex::simplex(VertexSet::EMPTY);
        assert!(is_shellable(&empty, 1).is_shellable());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let c4 = ind_r_complex(&Graph::cycle(4), 1);
        assert!(prefix_search(&c4, 1).is_unknown());
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_shellable(&complex(&[&[1, 3], &[2, 4]]))
            .unwrap()
            .is_not_shellable());
        // cone over three points with apex 0
        let cone = complex(&[&[0, 1], &[0, 2], &[0, 3]]);
        assert!(brute_force_shellable(&cone).unwrap().is_shellable());
        assert!(brute_force_shellable(&complex(&[&[5, 6]])).unwrap().is_shellable());
        let many: Vec<Vec<usize>> = (0..9).map(|i| vec![i]).collect();
        let refs: Vec<&[usize]> = many.iter().map(|v| v.as_slice()).collect();
        assert!(matches!(
            brute_force_shellable(&complex(&refs)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn prefix_and_decomposition_agree_on_small_graphs() {
        for g in [Graph::cycle(5), Graph::cycle(6), Graph::path(6), Graph::complete(4)] {
            for r in 1..=3 {
                let d = ind_r_complex(&g, r);
                let a = prefix_search(&d, 1_000_000);
                let b = is_shellable(&d, 1_000_000);
                assert_eq!(a.is_shellable(), b.is_shellable(), "{g:?} r={r}");
                if let ShellDecision::Shellable(c) = b {
                    assert!(verify_shelling(&d, &c.order).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutations_cover_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
