//! Subsets of a ground set, stored as 64-bit masks over element positions.

use std::cmp::Ordering;
use std::fmt;

/// A subset of a ground set of at most 64 elements.
///
/// Bit `i` stands for the element at position `i` of the owning matroid's
/// ground list. The ordering is by size first and then lexicographic on the
/// sorted position lists, which is the order used for every enumerated list
/// of circuits and cocircuits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1 << i)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        ElementSet(indices.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub const fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(self, i: usize) -> Self {
        ElementSet(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        ElementSet(self.0 & !(1 << i))
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Positions in increasing order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Indices;

    fn into_iter(self) -> Indices {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.contains(diff.trailing_zeros() as usize) {
                // The first position where the sorted lists differ belongs to self.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Visits every `k`-subset of `0..n` in lexicographic order of the sorted
/// index lists.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ElementSet::from_indices(idx.iter().copied());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_size_then_lexicographic() {
        let a = ElementSet::from_indices([0, 1, 4]);
        let b = ElementSet::from_indices([0, 2, 6]);
        let c = ElementSet::from_indices([5]);
        assert!(c < a);
        assert!(a < b);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
        // [1,2] vs [0,5]: lexicographic puts [0,5] first
        assert!(ElementSet::from_indices([0, 5]) < ElementSet::from_indices([1, 2]));
    }

    #[test]
    fn k_subsets_counts_and_order() {
        let all: Vec<_> = k_subsets(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], ElementSet::from_indices([0, 1]));
        assert_eq!(all[9], ElementSet::from_indices([3, 4]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
        assert_eq!(k_subsets(3, 0).collect::<Vec<_>>(), vec![ElementSet::EMPTY]);
        assert_eq!(k_subsets(2, 3).count(), 0);
        assert_eq!(k_subsets(4, 4).count(), 1);
    }

    #[test]
    fn indices_iterate_in_order() {
        let s = ElementSet::from_indices([7, 2, 63]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2, 7, 63]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(2));
    }
}
