//! Builders for the named families: G, G', the decomposition blocks G_i,
//! trivial families, Frankl-type cover-case families, and the two-block
//! family with no triangles.

use crate::family::Family;
use crate::kset::{k_subsets, KSet, MAX_N};
use crate::{Error, Result};

fn check_base(n: u32, k: u32) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::Param(format!("n={n} out of range 1..={MAX_N}")));
    }
    if k > n {
        return Err(Error::Param(format!("k={k} exceeds n={n}")));
    }
    Ok(())
}

fn collect(n: u32, k: u32, pred: impl Fn(KSet) -> bool) -> Result<Family> {
    let members: Vec<KSet> = k_subsets(n, k).filter(|&s| pred(s)).collect();
    Family::new(n, k, members)
}

/// All k-sets F with |F ∩ [r+t]| = r + t - 1.
pub fn build_g(n: u32, k: u32, r: u32, t: u32) -> Result<Family> {
    check_base(n, k)?;
    if r < 2 || t < 1 {
        return Err(Error::Param("need r >= 2 and t >= 1".into()));
    }
    if n < r + t {
        return Err(Error::Param(format!("need n >= r + t = {}", r + t)));
    }
    let head = KSet::interval(1, r + t);
    collect(n, k, |s| s.intersect(head).len() == r + t - 1)
}

/// All k-sets F with |F ∩ [r+t]| >= r + t - 1.
pub fn build_gprime(n: u32, k: u32, r: u32, t: u32) -> Result<Family> {
    check_base(n, k)?;
    if r < 2 || t < 1 {
        return Err(Error::Param("need r >= 2 and t >= 1".into()));
    }
    if n < r + t {
        return Err(Error::Param(format!("need n >= r + t = {}", r + t)));
    }
    let head = KSet::interval(1, r + t);
    collect(n, k, |s| s.intersect(head).len() >= r + t - 1)
}

/// The i-th decomposition block of G: members avoiding element i of [r+t].
pub fn build_g_block(n: u32, k: u32, r: u32, t: u32, i: u32) -> Result<Family> {
    if i < 1 || i > r + t {
        return Err(Error::Param(format!("block index {i} out of [1, {}]", r + t)));
    }
    let g = build_g(n, k, r, t)?;
    let members = g
        .members()
        .iter()
        .copied()
        .filter(|m| !m.contains(i))
        .collect();
    Family::new(n, k, members)
}

/// All k-sets containing [t].
pub fn build_trivial(n: u32, k: u32, t: u32) -> Result<Family> {
    check_base(n, k)?;
    if t < 1 || t > k {
        return Err(Error::Param(format!("need 1 <= t <= k, got t={t}, k={k}")));
    }
    let core = KSet::interval(1, t);
    collect(n, k, |s| core.is_subset_of(s))
}

/// The Frankl-type family realizing the cover-classification cases:
/// {F : [t] ⊆ F, F ∩ [t+1, ℓ] ≠ ∅} ∪ {F : |F ∩ [t]| = t-1, [t+1, ℓ] ⊆ F}.
/// ℓ = t+2 realizes Case 2, ℓ >= t+3 realizes Case 3.
pub fn build_frankl(n: u32, k: u32, t: u32, ell: u32) -> Result<Family> {
    check_base(n, k)?;
    if t < 1 {
        return Err(Error::Param("t must be at least 1".into()));
    }
    if ell < t + 2 || ell > k + 1 {
        return Err(Error::Param(format!(
            "need t + 2 <= ell <= k + 1, got ell={ell} (t={t}, k={k})"
        )));
    }
    if ell > n {
        return Err(Error::Param(format!("ell={ell} exceeds n={n}")));
    }
    if k < ell - 1 {
        return Err(Error::Param(format!("need k >= ell - 1 = {}", ell - 1)));
    }
    let core = KSet::interval(1, t);
    let tail = KSet::interval(t + 1, ell);
    collect(n, k, |s| {
        let hits_core = core.is_subset_of(s);
        (hits_core && !s.intersect(tail).is_empty())
            || (s.intersect(core).len() == t - 1 && tail.is_subset_of(s))
    })
}

/// All k-sets meeting both [r+t] and [r+t+1, 2r+2t] in >= r+t-1 elements.
/// For t >= 2 the family has no (r+1,t)-triangles; for t = 1 the builder
/// still works but carries no zero-triangle guarantee.
pub fn build_two_block(n: u32, k: u32, r: u32, t: u32) -> Result<Family> {
    check_base(n, k)?;
    if r < 2 || t < 1 {
        return Err(Error::Param("need r >= 2 and t >= 1".into()));
    }
    if n < 2 * (r + t) {
        return Err(Error::Param(format!("need n >= 2(r+t) = {}", 2 * (r + t))));
    }
    if k < 2 * (r + t) - 2 {
        return Err(Error::Param(format!(
            "need k >= 2(r+t) - 2 = {}",
            2 * (r + t) - 2
        )));
    }
    let first = KSet::interval(1, r + t);
    let second = KSet::interval(r + t + 1, 2 * (r + t));
    collect(n, k, |s| {
        s.intersect(first).len() >= r + t - 1 && s.intersect(second).len() >= r + t - 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{count_triangles, is_r_wise_t_intersecting, is_trivial};
    use num_bigint::BigUint;

    #[test]
    fn g_small_cases() {
        let g = build_g(5, 2, 2, 1).unwrap();
        let elems: Vec<Vec<u32>> = g.members().iter().map(|m| m.elems()).collect();
        assert_eq!(elems, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        assert_eq!(build_g(6, 4, 2, 2).unwrap().len(), 8);
        // no room outside [r+t]: empty family
        assert_eq!(build_g(5, 5, 2, 2).unwrap().len(), 0);
    }

    #[test]
    fn gprime_small_cases() {
        assert_eq!(build_gprime(5, 2, 2, 1).unwrap().len(), 3);
        assert_eq!(build_gprime(6, 4, 2, 2).unwrap().len(), 9);
        // 3*C(5,1) + C(5,0) = 16
        assert_eq!(build_gprime(8, 3, 2, 1).unwrap().len(), 16);
    }

    #[test]
    fn g_is_r_wise_t_intersecting_and_nontrivial() {
        for (n, k, r, t) in [(5, 2, 2, 1), (6, 4, 2, 2), (8, 3, 2, 1), (9, 5, 3, 2)] {
            let g = build_g(n, k, r, t).unwrap();
            assert!(is_r_wise_t_intersecting(&g, r, t), "{n} {k} {r} {t}");
            if !g.is_empty() && n > k {
                assert!(!is_trivial(&g, t));
            }
        }
    }

    #[test]
    fn blocks_partition_g() {
        let (n, k, r, t) = (6, 4, 2, 2);
        let g = build_g(n, k, r, t).unwrap();
        let mut union: Vec<_> = Vec::new();
        for i in 1..=(r + t) {
            let b = build_g_block(n, k, r, t, i).unwrap();
            assert_eq!(b.len(), 2); // C(2,1)
            union.extend(b.members().iter().copied());
        }
        union.sort();
        union.dedup();
        assert_eq!(union.len(), g.len());

        let b3 = build_g_block(5, 2, 2, 1, 3).unwrap();
        assert_eq!(b3.members()[0].elems(), vec![1, 2]);
        assert!(build_g_block(5, 2, 2, 1, 4).is_err());
    }

    #[test]
    fn trivial_cases() {
        let f = build_trivial(4, 2, 1).unwrap();
        let elems: Vec<Vec<u32>> = f.members().iter().map(|m| m.elems()).collect();
        assert_eq!(elems, vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
        assert_eq!(build_trivial(6, 3, 2).unwrap().len(), 4);
        let f = build_trivial(7, 3, 1).unwrap();
        assert_eq!(
            count_triangles(&f, 2, 1, false).unwrap(),
            BigUint::from(0u32)
        );
    }

    #[test]
    fn frankl_size_and_property() {
        // (81,3,1,ell=4): (C(80,2) - C(77,2)) + C(77,0) = 3160 - 2926 + 1 = 235
        let f = build_frankl(81, 3, 1, 4).unwrap();
        assert_eq!(f.len(), 235);
        assert!(is_r_wise_t_intersecting(&f, 2, 1));

        let f = build_frankl(12, 4, 2, 4).unwrap();
        assert!(is_r_wise_t_intersecting(&f, 2, 2));

        assert!(build_frankl(12, 4, 1, 2).is_err());
        assert!(build_frankl(12, 4, 1, 6).is_err());
    }

    #[test]
    fn two_block_zero_triangles() {
        let f = build_two_block(10, 7, 2, 2).unwrap();
        let first = KSet::interval(1, 4);
        let second = KSet::interval(5, 8);
        for m in f.members() {
            assert!(m.intersect(first).len() >= 3);
            assert!(m.intersect(second).len() >= 3);
        }
        assert_eq!(
            count_triangles(&f, 2, 2, false).unwrap(),
            BigUint::from(0u32)
        );
    }
}
