use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the generating set, stored as a bit mask over generator indices.
///
/// Subsets order lexicographically by their ascending member lists, so
/// `{0, 1, 2, 4} < {1, 2, 3}` and a prefix sorts before its extensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        GenSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        GenSet(1 << i)
    }

    /// Panics if an index is 32 or more.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u32;
        for i in indices {
            assert!(i < 32, "generator index {i} does not fit a GenSet");
            bits |= 1 << i;
        }
        GenSet(bits)
    }

    /// Builds a set from 1-based indices, the convention used in printed examples.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self::from_indices(indices.into_iter().map(|i| {
            assert!(i >= 1, "1-based index must be positive");
            i - 1
        }))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: GenSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub const fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub const fn with(self, i: usize) -> GenSet {
        GenSet(self.0 | (1 << i))
    }

    pub const fn without(self, i: usize) -> GenSet {
        GenSet(self.0 & !(1 << i))
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Fails with `IndexOutOfRange` unless every member is below `n`.
    pub fn check(self, n: usize) -> Result<()> {
        if self.is_subset(GenSet::full(n)) {
            Ok(())
        } else {
            let index = 31 - self.0.leading_zeros() as usize;
            Err(Error::IndexOutOfRange { index, n })
        }
    }

    /// Every subset of `self`, in increasing bit order, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for GenSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for GenSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        GenSet::from_indices(iter)
    }
}

impl IntoIterator for GenSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`GenSet`].
#[derive(Clone)]
pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = GenSet;

    fn next(&mut self) -> Option<GenSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(GenSet(cur))
    }
}
