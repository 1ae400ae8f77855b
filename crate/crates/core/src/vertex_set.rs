//! Subsets of an ordered ground set `[m] = {1, ..., m}` stored as a 64-bit mask.
//!
//! Vertex `i` occupies bit `i - 1`, so the representation supports ground sets with at most
//! [`MAX_VERTICES`] elements.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "ground set of size {m} exceeds {MAX_VERTICES}");
        if m == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Panics on a vertex outside `1..=64`; validated construction goes through
    /// [`crate::Complex::new`].
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(Self::EMPTY, |acc, v| acc.with(v))
    }

    pub fn with(self, v: usize) -> Self {
        self | Self::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !Self::singleton(v).0)
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside `[m]`.
    pub fn complement(self, m: usize) -> Self {
        Self::full(m).difference(self)
    }

    /// Largest vertex, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly smaller than `v`.
    pub fn rank_of(self, v: usize) -> usize {
        let below = if v == 0 { 0 } else { (1u64 << (v - 1)) - 1 };
        (self.0 & below).count_ones() as usize
    }

    /// Shifts every vertex up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        if self.0 == 0 {
            return self;
        }
        assert!(self.max_vertex() + offset <= MAX_VERTICES, "shift overflows the ground set");
        VertexSet(self.0 << offset)
    }

    /// All subsets of `self`, in increasing order of their bitmasks.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// Image under a vertex map given as `map[v - 1]`.
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().fold(Self::EMPTY, |acc, v| acc.with(map[v - 1]))
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

/// Lexicographic order on increasing vertex lists, so `{} < {1} < {1,2} < {1,3} < {2}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_vertices([1, 2]);
        let b = VertexSet::from_vertices([1, 3]);
        let c = VertexSet::from_vertices([2]);
        assert!(VertexSet::EMPTY < a && a < b && b < c);
    }

    #[test]
    fn subsets_enumerate_all() {
        let s = VertexSet::from_vertices([2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_set_of_64() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert!(VertexSet::full(64).contains(64));
        assert_eq!(VertexSet::singleton(64).max_vertex(), 64);
    }

    #[test]
    fn rank_and_shift() {
        let s = VertexSet::from_vertices([1, 4, 6]);
        assert_eq!(s.rank_of(5), 2);
        assert_eq!(s.rank_of(1), 0);
        assert_eq!(s.shifted(2).to_vec(), vec![3, 6, 8]);
    }
}
