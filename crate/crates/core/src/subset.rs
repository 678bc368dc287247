//! Single-word bitmask sets over element indices `0..64`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier this crate handles; one bit per element of a `u64`.
pub const MAX_ORDER: usize = 64;

/// A subset of the elements of a fixed finite structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubSet(u64);

impl SubSet {
    pub const EMPTY: SubSet = SubSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SubSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All elements `0..order`.
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        if order == MAX_ORDER {
            SubSet(u64::MAX)
        } else {
            SubSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub fn singleton(x: usize) -> Self {
        SubSet(1u64 << x)
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < MAX_ORDER && self.0 >> x & 1 == 1
    }

    /// Returns true if `x` was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let before = self.0;
        self.0 |= 1u64 << x;
        before != self.0
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
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
    pub fn is_subset(self, other: SubSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: SubSet) -> SubSet {
        SubSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SubSet) -> SubSet {
        SubSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: SubSet) -> SubSet {
        SubSet(self.0 & !other.0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for SubSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = SubSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for SubSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`SubSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
