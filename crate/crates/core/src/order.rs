//! Finite posets viewed as finite spectral spaces.
//!
//! The orientation is fixed once for the whole crate: `a <= b` means that
//! `a` is a specialization of `b`, i.e. `a` lies in the closure of `{b}`.
//! Closed sets are therefore the down-sets and open sets the up-sets.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of elements a [`FinitePoset`] may carry; subsets are `u64` masks.
pub const MAX_ELEMENTS: usize = 64;

/// Default cap for down-set enumeration.
pub const DEFAULT_DOWN_SET_CAP: usize = 20;

/// A subset of the elements of a fixed finite poset, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteSubset {
    bits: u64,
    len: usize,
}

fn mask_for(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl FiniteSubset {
    pub fn empty(len: usize) -> Self {
        assert!(len <= MAX_ELEMENTS);
        Self { bits: 0, len }
    }

    pub fn full(len: usize) -> Self {
        assert!(len <= MAX_ELEMENTS);
        Self {
            bits: mask_for(len),
            len,
        }
    }

    /// Builds a subset from raw bits; bits beyond `len` are rejected.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "subset carrier",
                size: len,
                cap: MAX_ELEMENTS,
            });
        }
        if bits & !mask_for(len) != 0 {
            let index = 63 - (bits & !mask_for(len)).leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, len });
        }
        Ok(Self { bits, len })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(len);
        for i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, len });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    pub fn singleton(len: usize, index: usize) -> Result<Self> {
        Self::from_indices(len, [index])
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the carrier, not of the subset.
    #[inline]
    pub fn carrier_len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.bits >> i & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == mask_for(self.len)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits | other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits & other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits & !other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & mask_for(self.len),
            len: self.len,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.len).filter(move |i| bits >> i & 1 == 1)
    }

    /// All `2^len` subsets of a carrier of size `len`.
    pub fn all(len: usize) -> impl Iterator<Item = FiniteSubset> {
        assert!(len < 64, "cannot enumerate all subsets of {len} elements");
        (0..1u64 << len).map(move |bits| FiniteSubset { bits, len })
    }
}

impl fmt::Debug for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite poset under the specialization order.
///
/// `below[i]` is the closure `cl{i}` and `above[i]` the generalization
/// closure `gen{i}`, both as bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    labels: Vec<String>,
    below: Vec<u64>,
    above: Vec<u64>,
}

impl FinitePoset {
    /// The empty poset, i.e. the empty spectral space.
    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            below: Vec::new(),
            above: Vec::new(),
        }
    }

    /// Builds a poset from labels and generating pairs `(a, b)` meaning `a <= b`.
    ///
    /// The order is the reflexive-transitive closure of the pairs. Reflexive
    /// pairs are allowed and ignored.
    pub fn build<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_owned()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_pairs(labels, &pairs)
    }

    /// Same as [`FinitePoset::build`] with pairs given by element index.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "poset",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            for i in [a, b] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
            }
            if a != b {
                succ[a].push(b);
            }
        }
        let order = topological_order(&succ).map_err(|cycle| {
            Error::Cycle(cycle.into_iter().map(|i| labels[i].clone()).collect())
        })?;

        // Reverse topological order: successors are finished first.
        let mut above = vec![0u64; n];
        for &v in order.iter().rev() {
            let mut m = 1u64 << v;
            for &w in &succ[v] {
                m |= above[w];
            }
            above[v] = m;
        }
        Ok(Self::from_above(labels, above))
    }

    /// Builds a poset from an explicit relation: `leq[i]` is the mask of all
    /// `j` with `i <= j`. The relation is validated.
    pub fn from_relation(labels: Vec<String>, leq: Vec<u64>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "poset",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        if leq.len() != n {
            return Err(Error::NotPartialOrder(format!(
                "relation has {} rows for {n} elements",
                leq.len()
            )));
        }
        let full = mask_for(n);
        for (i, &row) in leq.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::NotPartialOrder(format!("row {i} out of range")));
            }
            if row >> i & 1 == 0 {
                return Err(Error::NotPartialOrder(format!("not reflexive at {}", labels[i])));
            }
            for j in (0..n).filter(|&j| row >> j & 1 == 1) {
                if j != i && leq[j] >> i & 1 == 1 {
                    return Err(Error::NotPartialOrder(format!(
                        "not antisymmetric: {} and {}",
                        labels[i], labels[j]
                    )));
                }
                if leq[j] & !row != 0 {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive through {}",
                        labels[j]
                    )));
                }
            }
        }
        Ok(Self::from_above(labels, leq))
    }

    fn from_above(labels: Vec<String>, above: Vec<u64>) -> Self {
        let n = labels.len();
        let mut below = vec![0u64; n];
        for (i, &row) in above.iter().enumerate() {
            for (j, b) in below.iter_mut().enumerate() {
                if row >> j & 1 == 1 {
                    *b |= 1 << i;
                }
            }
        }
        Self {
            labels,
            below,
            above,
        }
    }

    /// Elements labelled `0, 1, …, n-1`.
    pub fn default_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// The opposite order. For a finite space this is its Hochster dual.
    pub fn opposite(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `a <= b`, i.e. `a ∈ cl{b}`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a] >> b & 1 == 1
    }

    /// Closure of a point: everything below it.
    pub fn closure_of(&self, i: usize) -> FiniteSubset {
        FiniteSubset {
            bits: self.below[i],
            len: self.len(),
        }
    }

    /// Generalization closure of a point: everything above it.
    pub fn generalizations_of(&self, i: usize) -> FiniteSubset {
        FiniteSubset {
            bits: self.above[i],
            len: self.len(),
        }
    }

    pub fn down_closure(&self, s: &FiniteSubset) -> FiniteSubset {
        let bits = s.iter().fold(0, |acc, i| acc | self.below[i]);
        FiniteSubset {
            bits,
            len: self.len(),
        }
    }

    pub fn up_closure(&self, s: &FiniteSubset) -> FiniteSubset {
        let bits = s.iter().fold(0, |acc, i| acc | self.above[i]);
        FiniteSubset {
            bits,
            len: self.len(),
        }
    }

    /// Whether `s` is closed under going down, i.e. closed in the space.
    pub fn is_down_set(&self, s: &FiniteSubset) -> bool {
        debug_assert_eq!(s.len, self.len());
        s.iter().all(|i| self.below[i] & !s.bits == 0)
    }

    /// Whether `s` is closed under going up, i.e. open in the space.
    pub fn is_up_set(&self, s: &FiniteSubset) -> bool {
        debug_assert_eq!(s.len, self.len());
        s.iter().all(|i| self.above[i] & !s.bits == 0)
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between,
    /// in lexicographic index order.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) {
                    let between = self.above[a] & self.below[b] & !(1 << a) & !(1 << b);
                    if between == 0 {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// Elements listed so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        // The strict down-set of an element is strictly smaller than that of
        // anything above it.
        order.sort_by_key(|&i| (self.below[i].count_ones(), i));
        order
    }

    /// Disjoint union of posets; labels are prefixed with the summand index.
    pub fn disjoint_union(parts: &[FinitePoset]) -> Result<Self> {
        let total: usize = parts.iter().map(|p| p.len()).sum();
        if total > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "poset",
                size: total,
                cap: MAX_ELEMENTS,
            });
        }
        let mut labels = Vec::with_capacity(total);
        let mut above = Vec::with_capacity(total);
        let mut offset = 0;
        for (k, p) in parts.iter().enumerate() {
            labels.extend(p.labels.iter().map(|l| format!("{k}:{l}")));
            above.extend(p.above.iter().map(|&m| m << offset));
            offset += p.len();
        }
        Ok(Self::from_above(labels, above))
    }

    /// Enumerates all down-sets (closed subsets) exactly once.
    ///
    /// Fails when the poset has more than `cap` elements.
    pub fn down_sets(&self, cap: usize) -> Result<DownSets<'_>> {
        if self.len() > cap {
            return Err(Error::CapExceeded {
                what: "poset for down-set enumeration",
                size: self.len(),
                cap,
            });
        }
        Ok(DownSets {
            poset: self,
            order: self.linear_extension(),
            stack: vec![(0, 0)],
        })
    }

    /// Number of down-sets, equivalently of antichains.
    ///
    /// Uses `N(S) = N(S \ ↑x) + N(S \ ↓x)` memoized on the remaining set.
    pub fn count_down_sets(&self) -> u128 {
        let mut memo = HashMap::new();
        self.count_within(mask_for(self.len()), &mut memo)
    }

    fn count_within(&self, rest: u64, memo: &mut HashMap<u64, u128>) -> u128 {
        if rest == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&rest) {
            return c;
        }
        let x = rest.trailing_zeros() as usize;
        let without = self.count_within(rest & !self.above[x], memo);
        let with = self.count_within(rest & !self.below[x], memo);
        memo.insert(rest, without + with);
        without + with
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covering_pairs()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "Poset{{{}; {}}}", self.labels.join(","), covers.join(","))
    }
}

/// Kahn's algorithm; on failure returns one offending cycle, closed (first = last).
fn topological_order(succ: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for outs in succ {
        for &w in outs {
            indeg[w] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover predecessor; walk backwards until a repeat.
    let leftover: Vec<bool> = indeg.iter().map(|&d| d > 0).collect();
    let mut pred = vec![usize::MAX; n];
    for v in 0..n {
        for &w in &succ[v] {
            if leftover[v] && leftover[w] {
                pred[w] = v;
            }
        }
    }
    let mut v = (0..n).find(|&v| leftover[v]).expect("leftover vertex");
    let mut seen = vec![false; n];
    while !seen[v] {
        seen[v] = true;
        v = pred[v];
    }
    let start = v;
    let mut cycle = vec![start];
    let mut u = pred[start];
    while u != start {
        cycle.push(u);
        u = pred[u];
    }
    cycle.push(start);
    cycle.reverse();
    Err(cycle)
}

/// Iterator over the down-sets of a poset, see [`FinitePoset::down_sets`].
///
/// Walks a linear extension; an element may be added only once everything
/// strictly below it is present.
pub struct DownSets<'a> {
    poset: &'a FinitePoset,
    order: Vec<usize>,
    stack: Vec<(usize, u64)>,
}

impl Iterator for DownSets<'_> {
    type Item = FiniteSubset;

    fn next(&mut self) -> Option<FiniteSubset> {
        let n = self.order.len();
        while let Some((k, mask)) = self.stack.pop() {
            if k == n {
                return Some(FiniteSubset {
                    bits: mask,
                    len: self.poset.len(),
                });
            }
            let x = self.order[k];
            let strictly_below = self.poset.below[x] & !(1 << x);
            if strictly_below & !mask == 0 {
                self.stack.push((k + 1, mask | 1 << x));
            }
            self.stack.push((k + 1, mask));
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        let labels = FinitePoset::default_labels(n);
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_index_pairs(labels, &pairs).unwrap()
    }

    fn antichain(n: usize) -> FinitePoset {
        FinitePoset::from_index_pairs(FinitePoset::default_labels(n), &[]).unwrap()
    }

    fn brute_down_sets(p: &FinitePoset) -> Vec<FiniteSubset> {
        FiniteSubset::all(p.len())
            .filter(|s| {
                (0..p.len()).all(|i| {
                    !s.contains(i) || (0..p.len()).all(|j| !p.leq(j, i) || s.contains(j))
                })
            })
            .collect()
    }

    #[test]
    fn singleton_poset() {
        let p = FinitePoset::build(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq(0, 0));
    }

    #[test]
    fn two_chain_puts_a_in_closure_of_b() {
        let p = FinitePoset::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
        assert!(p.closure_of(1).contains(0));
    }

    #[test]
    fn three_chain_closure_has_six_pairs() {
        let p = FinitePoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let pairs = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| p.leq(a, b))
            .count();
        assert_eq!(pairs, 6);
        assert_eq!(p.covering_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = FinitePoset::build(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
    }

    #[test]
    fn cycle_is_reported() {
        let err =
            FinitePoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap_err();
        match err {
            Error::Cycle(c) => {
                assert_eq!(c.first(), c.last());
                assert_eq!(c.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = FinitePoset::build(&["a", "b", "c"], &[("c", "a"), ("a", "c"), ("a", "b")])
            .unwrap_err();
        assert!(matches!(err, Error::Cycle(ref c) if c.len() == 3), "{err:?}");
    }

    #[test]
    fn unknown_label_rejected() {
        let err = FinitePoset::build(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn from_relation_validates() {
        let labels = FinitePoset::default_labels(2);
        assert!(FinitePoset::from_relation(labels.clone(), vec![0b11, 0b10]).is_ok());
        assert!(FinitePoset::from_relation(labels.clone(), vec![0b01, 0b11]).is_ok());
        assert!(FinitePoset::from_relation(labels.clone(), vec![0b11, 0b11]).is_err());
        assert!(FinitePoset::from_relation(labels.clone(), vec![0b10, 0b10]).is_err());
        let labels = FinitePoset::default_labels(3);
        // 0<=1, 1<=2 but not 0<=2
        assert!(FinitePoset::from_relation(labels, vec![0b011, 0b110, 0b100]).is_err());
    }

    #[test]
    fn opposite_reverses() {
        let p = chain(2);
        let q = p.opposite();
        assert!(q.leq(1, 0));
        assert_eq!(q.labels(), p.labels());
        assert_eq!(q.opposite(), p);
        let one = chain(1);
        assert_eq!(one.opposite(), one);
    }

    #[test]
    fn down_set_examples() {
        let p = chain(2);
        assert!(p.is_down_set(&FiniteSubset::from_indices(2, [0]).unwrap()));
        assert!(!p.is_down_set(&FiniteSubset::from_indices(2, [1]).unwrap()));
        let c3 = chain(3);
        assert!(!c3.is_down_set(&FiniteSubset::from_indices(3, [0, 2]).unwrap()));
    }

    #[test]
    fn down_set_counts() {
        assert_eq!(antichain(2).down_sets(20).unwrap().count(), 4);
        for n in 0..=6 {
            let p = chain(n);
            assert_eq!(brute_down_sets(&p).len(), n + 1);
            assert_eq!(p.down_sets(20).unwrap().count(), n + 1);
            assert_eq!(p.count_down_sets(), (n + 1) as u128);
        }
        let e = FinitePoset::empty();
        let all: Vec<_> = e.down_sets(20).unwrap().collect();
        assert_eq!(all, vec![FiniteSubset::empty(0)]);
    }

    #[test]
    fn down_set_cap() {
        assert!(matches!(
            antichain(21).down_sets(20),
            Err(Error::CapExceeded { size: 21, cap: 20, .. })
        ));
        assert_eq!(antichain(40).count_down_sets(), 1u128 << 40);
    }

    #[test]
    fn subset_ops() {
        let a = FiniteSubset::from_indices(4, [0, 1]).unwrap();
        let b = FiniteSubset::from_indices(4, [1, 2]).unwrap();
        assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(a.complement().iter().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(a.complement().complement(), a);
        assert!(FiniteSubset::from_indices(4, [4]).is_err());
        assert!(FiniteSubset::from_bits(0b10000, 4).is_err());
        assert!(FiniteSubset::full(64).is_full());
    }
}
