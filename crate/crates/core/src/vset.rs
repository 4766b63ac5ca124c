//! Dense vertex sets over at most 64 vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex label a [`VertexSet`] can hold, plus one.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels in `0..64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    #[inline]
    pub fn pop_min(&mut self) -> Option<usize> {
        let v = self.min()?;
        self.0 &= self.0 - 1;
        Some(v)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the sorted element lists lexicographically.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let (mut a, mut b) = (self, other);
        loop {
            match (a.pop_min(), b.pop_min()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }

    /// Canonical order used for edge and facet lists: by size, then lexicographic.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }

    /// Maps every element through `f`.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> Self {
        self.iter().map(&mut f).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(items: &[usize]) -> Self {
        items.iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

/// Sorts a family of sets into canonical order and removes duplicates.
pub fn canonicalize(sets: &mut Vec<VertexSet>) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
}

/// Inclusion-minimal members of `sets`, in canonical order.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    canonicalize(&mut sets);
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // canonical order puts every proper subset of `s` before it
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Inclusion-maximal members of `sets`, in canonical order.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    canonicalize(&mut sets);
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets.into_iter().rev() {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.reverse();
    kept
}

/// All `k`-subsets of `ground`, in lexicographic order.
pub fn k_subsets(ground: VertexSet, k: usize) -> Vec<VertexSet> {
    let items = ground.to_vec();
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + items.len() - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = VertexSet::from([0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.max(), Some(5));
        assert_eq!(format!("{s}"), "{0,3,5}");
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn lex_and_canonical_order() {
        let a = VertexSet::from([0, 5]);
        let b = VertexSet::from([1, 2]);
        let c = VertexSet::from([0, 1, 2]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(c.lex_cmp(a), Ordering::Less);
        assert_eq!(a.canonical_cmp(c), Ordering::Less);
    }

    #[test]
    fn minimal_and_maximal() {
        let sets = vec![
            VertexSet::from([0, 1, 2]),
            VertexSet::from([0, 1]),
            VertexSet::from([2, 3]),
            VertexSet::from([0, 1]),
        ];
        assert_eq!(
            minimal_sets(sets.clone()),
            vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])]
        );
        assert_eq!(
            maximal_sets(sets),
            vec![VertexSet::from([2, 3]), VertexSet::from([0, 1, 2])]
        );
    }

    #[test]
    fn subsets_enumeration() {
        let g = VertexSet::from([1, 4, 6, 7]);
        let two = k_subsets(g, 2);
        assert_eq!(two.len(), 6);
        assert_eq!(two[0], VertexSet::from([1, 4]));
        assert_eq!(two[5], VertexSet::from([6, 7]));
        assert_eq!(k_subsets(g, 0), vec![VertexSet::EMPTY]);
        assert!(k_subsets(g, 5).is_empty());
        assert_eq!(k_subsets(g, 4), vec![g]);
    }

    #[test]
    fn serde_roundtrip() {
        let s = VertexSet::from([2, 9, 63]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[2,9,63]");
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }
}
