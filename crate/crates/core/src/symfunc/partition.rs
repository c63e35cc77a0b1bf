use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered by weight first and reverse lexicographically
/// within a weight, so `(3) < (2,1) < (1,1,1)` and lower degrees come first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts`; trailing zeros are stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// Arm length `i` if this is the hook `(i, 1, ..., 1)`.
    pub fn hook_arm(&self) -> Option<u32> {
        match self.0.split_first() {
            Some((&arm, rest)) if rest.iter().all(|&p| p == 1) => Some(arm),
            _ => None,
        }
    }

    /// Whether the diagram fits in `s` rows of length at most `r`, i.e.
    /// indexes a Schubert class of `G(r, r + s)`.
    pub fn fits_box(&self, r: u32, s: u32) -> bool {
        self.len() <= s as usize && self.first() <= r
    }

    /// Union of the parts of two partitions, e.g. `(2,1) + (2) = (2,2,1)`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Inserts a single part (ignored when zero).
    pub fn with_part(&self, part: u32) -> Partition {
        if part == 0 {
            return self.clone();
        }
        let pos = self.0.iter().position(|&p| p < part).unwrap_or(self.len());
        let mut parts = self.0.clone();
        parts.insert(pos, part);
        Partition(parts)
    }

    /// Order of the centralizer of a permutation of cycle type `self`:
    /// `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u32;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                acc *= part;
                acc *= mult;
                i += 1;
            }
        }
        acc
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `k` with at most `max_len` parts, each at most
/// `max_part`, in reverse lexicographic order.
pub fn partitions_of(k: u32, max_len: Option<usize>, max_part: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let max_len = max_len.unwrap_or(usize::MAX);
    let max_part = max_part.unwrap_or(k).min(k);
    fill(k, max_part, max_len, &mut current, &mut out);
    out
}

fn fill(rest: u32, cap: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(rest)).rev() {
        current.push(part);
        fill(rest - part, part, slots - 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_in_reverse_lex() {
        assert_eq!(partitions_of(3, None, None), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4, Some(2), Some(3)), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(partitions_of(0, None, None), vec![Partition::empty()]);
        assert_eq!(partitions_of(0, Some(0), Some(0)), vec![Partition::empty()]);
        assert!(partitions_of(3, Some(0), None).is_empty());
    }

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (0..=10).map(|k| partitions_of(k, None, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn shape_helpers() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).hook_arm(), Some(3));
        assert_eq!(p(&[2, 2]).hook_arm(), None);
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 1]).with_part(2), p(&[3, 2, 1]));
        assert!(p(&[2, 2]).fits_box(2, 2));
        assert!(!p(&[3]).fits_box(2, 2));
        assert!(!p(&[1, 1, 1]).fits_box(2, 2));
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[3]).z(), BigInt::from(3));
        assert_eq!(p(&[2, 2]).z(), BigInt::from(8));
    }

    #[test]
    fn order_is_graded_reverse_lex() {
        let mut v = vec![p(&[1, 1]), Partition::empty(), p(&[2]), p(&[1])];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]);
    }
}
