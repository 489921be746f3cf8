use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of `[m]` as a bitmask; bit `i` is vertex `i` (0-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> VertexSet {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> VertexSet {
        VertexSet(1 << i)
    }

    pub fn full(m: usize) -> VertexSet {
        if m >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << m) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> VertexSet {
        VertexSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & o.0)
    }

    pub fn minus(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: VertexSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: VertexSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Number of elements strictly below `j`.
    pub fn count_below(self, j: usize) -> usize {
        (self.0 & ((1u32 << j) - 1)).count_ones() as usize
    }

    /// `epsilon(j, I) = (-1)^{#{i in I : i < j}}`, as a parity: true means `-1`.
    pub fn epsilon_negative(self, j: usize) -> bool {
        self.count_below(j) % 2 == 1
    }

    /// `epsilon(j, I)` as `+1` or `-1`.
    pub fn epsilon(self, j: usize) -> i64 {
        if self.epsilon_negative(j) {
            -1
        } else {
            1
        }
    }

    /// Ascending vertex iterator.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets, in ascending bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Subsets of the given size, in ascending bitmask order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        self.subsets().filter(move |s| s.len() == k)
    }

    /// Moves every vertex up by `by`.
    pub fn shift(self, by: usize) -> VertexSet {
        VertexSet(self.0 << by)
    }

    /// Re-indexes a subset of `within` onto `[|within|]`, preserving order.
    pub fn compress(self, within: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for (k, v) in within.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn expand(self, within: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for (k, v) in within.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << v;
            }
        }
        VertexSet(out)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> VertexSet {
        let mut s = 0u32;
        for i in iter {
            s |= 1 << i;
        }
        VertexSet(s)
    }
}

pub struct Iter(u32);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }
}

/// Submask enumeration in increasing order.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // increment within the mask
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|v| v + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_ascending_and_complete() {
        let s = VertexSet::from_iter([0, 2, 3]);
        let subs: Vec<u32> = s.subsets().map(|x| x.bits()).collect();
        assert_eq!(subs, vec![0, 1, 4, 5, 8, 9, 12, 13]);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(VertexSet::full(24).subsets_of_size(1).count(), 24);
    }

    #[test]
    fn epsilon_counts_smaller_elements() {
        let i = VertexSet::from_iter([0, 1]);
        assert_eq!(i.epsilon(0), 1);
        assert_eq!(i.epsilon(1), -1);
        assert_eq!(VertexSet::EMPTY.epsilon(5), 1);
        assert_eq!(VertexSet::from_iter([0, 1, 4]).epsilon(3), 1);
    }

    #[test]
    fn compress_roundtrip() {
        let within = VertexSet::from_iter([1, 3, 4]);
        let s = VertexSet::from_iter([3, 4]);
        let c = s.compress(within);
        assert_eq!(c, VertexSet::from_iter([1, 2]));
        assert_eq!(c.expand(within), s);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(VertexSet::from_iter([0, 2]).to_string(), "{1,3}");
    }
}
