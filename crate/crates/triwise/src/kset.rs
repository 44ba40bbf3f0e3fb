//! Fixed-width bit-vector representation of subsets of `[n]`.
//!
//! Element `i` of the ground set `[n] = {1, ..., n}` occupies bit `i - 1`.
//! The width cap of 128 keeps intersection and popcount branch-free.

use crate::{Error, Result};

/// Maximum supported ground-set size.
pub const MAX_N: u32 = 128;

/// A subset of `[n]` as a `u128` bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KSet {
    bits: u128,
}

impl KSet {
    /// Builds a set from a raw mask. The caller is responsible for keeping
    /// bits within the ambient `[n]`.
    pub fn from_bits(bits: u128) -> Self {
        KSet { bits }
    }

    /// Builds a set from 1-indexed elements, validating range and duplicates.
    pub fn from_elems(elems: &[u32], n: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Param(format!("ground-set size n={n} out of range 1..={MAX_N}")));
        }
        let mut bits: u128 = 0;
        for &e in elems {
            if e < 1 || e > n {
                return Err(Error::Param(format!("element {e} out of range 1..={n}")));
            }
            let bit = 1u128 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::Param(format!("duplicate element {e}")));
            }
            bits |= bit;
        }
        Ok(KSet { bits })
    }

    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, elem: u32) -> bool {
        elem >= 1 && elem <= MAX_N && self.bits & (1u128 << (elem - 1)) != 0
    }

    pub fn intersect(self, other: KSet) -> KSet {
        KSet { bits: self.bits & other.bits }
    }

    pub fn union(self, other: KSet) -> KSet {
        KSet { bits: self.bits | other.bits }
    }

    pub fn is_subset_of(self, other: KSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// 1-indexed elements in increasing order.
    pub fn elems(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut b = self.bits;
        while b != 0 {
            let i = b.trailing_zeros();
            out.push(i + 1);
            b &= b - 1;
        }
        out
    }

    /// The interval `[lo, hi]` as a mask, 1-indexed and inclusive.
    pub fn interval(lo: u32, hi: u32) -> KSet {
        debug_assert!(lo >= 1 && hi <= MAX_N);
        if hi < lo {
            return KSet { bits: 0 };
        }
        let width = hi - lo + 1;
        let block = if width == 128 { u128::MAX } else { (1u128 << width) - 1 };
        KSet { bits: block << (lo - 1) }
    }
}

/// Intersection size of a nonempty list of sets.
pub fn intersect_size(sets: &[KSet]) -> Result<u32> {
    if sets.is_empty() {
        return Err(Error::Param("intersect_size: empty input".into()));
    }
    let mut acc = u128::MAX;
    for s in sets {
        acc &= s.bits;
    }
    Ok(acc.count_ones())
}

/// Iterates all k-subsets of `[n]` in increasing bit-vector (numeric) order.
pub struct KSubsets {
    cur: u128,
    limit: u128,
    done: bool,
}

/// All k-subsets of `[n]`, smallest mask first (Gosper's hack).
pub fn k_subsets(n: u32, k: u32) -> KSubsets {
    assert!(n >= 1 && n <= MAX_N);
    if k > n {
        return KSubsets { cur: 0, limit: 0, done: true };
    }
    if k == 0 {
        return KSubsets { cur: 0, limit: 0, done: false };
    }
    let limit = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    KSubsets { cur: (1u128 << k) - 1, limit, done: false }
}

impl Iterator for KSubsets {
    type Item = KSet;

    fn next(&mut self) -> Option<KSet> {
        if self.done {
            return None;
        }
        let v = self.cur;
        if v == 0 {
            // the single empty subset
            self.done = true;
            return Some(KSet::from_bits(0));
        }
        if v > self.limit {
            self.done = true;
            return None;
        }
        // Gosper: next larger integer with the same popcount.
        let c = v & v.wrapping_neg();
        let r = v.wrapping_add(c);
        if r < v {
            self.done = true;
        } else {
            self.cur = (((r ^ v) >> 2) / c) | r;
        }
        Some(KSet::from_bits(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_elems_validates() {
        assert!(KSet::from_elems(&[1, 2, 3], 5).is_ok());
        assert!(KSet::from_elems(&[0], 5).is_err());
        assert!(KSet::from_elems(&[6], 5).is_err());
        assert!(KSet::from_elems(&[2, 2], 5).is_err());
        assert!(KSet::from_elems(&[1], 200).is_err());
    }

    #[test]
    fn elems_round_trip() {
        let s = KSet::from_elems(&[2, 5, 7], 8).unwrap();
        assert_eq!(s.elems(), vec![2, 5, 7]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn intersect_size_examples() {
        let n = 8;
        let a = KSet::from_elems(&[1, 2], n).unwrap();
        assert_eq!(intersect_size(&[a]).unwrap(), 2);

        let b = KSet::from_elems(&[1, 3], n).unwrap();
        let c = KSet::from_elems(&[2, 3], n).unwrap();
        assert_eq!(intersect_size(&[a, b, c]).unwrap(), 0);

        let x = KSet::from_elems(&[1, 2, 3, 5], n).unwrap();
        let y = KSet::from_elems(&[1, 2, 3, 6], n).unwrap();
        let z = KSet::from_elems(&[1, 2, 4, 5], n).unwrap();
        assert_eq!(intersect_size(&[x, y, z]).unwrap(), 2);

        assert!(intersect_size(&[]).is_err());
    }

    #[test]
    fn k_subsets_count_and_order() {
        let subs: Vec<KSet> = k_subsets(6, 3).collect();
        assert_eq!(subs.len(), 20);
        for w in subs.windows(2) {
            assert!(w[0].bits() < w[1].bits());
        }
        for s in &subs {
            assert_eq!(s.len(), 3);
        }
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 6).count(), 0);
    }

    #[test]
    fn interval_masks() {
        assert_eq!(KSet::interval(1, 3).elems(), vec![1, 2, 3]);
        assert_eq!(KSet::interval(4, 6).elems(), vec![4, 5, 6]);
        assert!(KSet::interval(4, 3).is_empty());
    }
}
