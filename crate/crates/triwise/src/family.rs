//! Uniform set families and the intersection / triangle predicates.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::kset::{k_subsets, KSet, MAX_N};
use crate::{Error, Result};

/// The parameter quadruple (n, k, r, t) under the standing assumptions
/// r >= 2, 1 <= t <= k - r, k <= n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Params {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub t: u32,
}

impl Params {
    pub fn new(n: u32, k: u32, r: u32, t: u32) -> Result<Self> {
        let p = Params { n, k, r, t };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_N {
            return Err(Error::Param(format!("n={} out of range 1..={MAX_N}", self.n)));
        }
        if self.k > self.n {
            return Err(Error::Param(format!("k={} exceeds n={}", self.k, self.n)));
        }
        if self.r < 2 {
            return Err(Error::Param(format!("r={} must be at least 2", self.r)));
        }
        if self.t < 1 {
            return Err(Error::Param("t must be at least 1".into()));
        }
        if self.t > self.k {
            return Err(Error::Param(format!(
                "t={} exceeds k={}",
                self.t, self.k
            )));
        }
        Ok(())
    }

    /// The standing assumption t <= k - r under which the headline bounds
    /// are stated. Search and counting remain meaningful outside it.
    pub fn meets_standing_assumption(&self) -> bool {
        self.k >= self.r && self.t <= self.k - self.r
    }
}

/// A k-uniform family over `[n]`: duplicate-free, members sorted by
/// bit-vector value so serialization is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    n: u32,
    k: u32,
    members: Vec<KSet>,
}

impl Family {
    pub fn new(n: u32, k: u32, mut members: Vec<KSet>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Param(format!("n={n} out of range 1..={MAX_N}")));
        }
        if k > n {
            return Err(Error::Param(format!("k={k} exceeds n={n}")));
        }
        let ambient = KSet::interval(1, n);
        members.sort();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Param(format!(
                    "duplicate member {:?}",
                    w[0].elems()
                )));
            }
        }
        for m in &members {
            if m.len() != k {
                return Err(Error::Param(format!(
                    "member {:?} has {} elements, expected {k}",
                    m.elems(),
                    m.len()
                )));
            }
            if !m.is_subset_of(ambient) {
                return Err(Error::Param(format!(
                    "member {:?} has elements outside [{}]",
                    m.elems(),
                    n
                )));
            }
        }
        Ok(Family { n, k, members })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[KSet] {
        &self.members
    }

    pub fn contains(&self, s: &KSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    /// Intersection of all members; the full ground set for an empty family.
    pub fn common_core(&self) -> KSet {
        let mut acc = KSet::interval(1, self.n);
        for m in &self.members {
            acc = acc.intersect(*m);
        }
        acc
    }

    /// Union of all members.
    pub fn support(&self) -> KSet {
        let mut acc = KSet::from_bits(0);
        for m in &self.members {
            acc = acc.union(*m);
        }
        acc
    }

    /// Applies a permutation of `[n]`; `perm[i]` is the image of element i+1.
    pub fn relabel(&self, perm: &[u32]) -> Result<Family> {
        if perm.len() != self.n as usize {
            return Err(Error::Param("permutation length must equal n".into()));
        }
        let mut seen = vec![false; self.n as usize + 1];
        for &p in perm {
            if p < 1 || p > self.n || seen[p as usize] {
                return Err(Error::Param("not a permutation of [n]".into()));
            }
            seen[p as usize] = true;
        }
        let mut out = Vec::with_capacity(self.members.len());
        for m in &self.members {
            let mut bits: u128 = 0;
            for e in m.elems() {
                bits |= 1u128 << (perm[(e - 1) as usize] - 1);
            }
            out.push(KSet::from_bits(bits));
        }
        Family::new(self.n, self.k, out)
    }
}

/// Incremental checker for the r-wise t-intersecting property.
///
/// Maintains, per level j, the distinct intersections of j+1 distinct
/// members, reduced to an antichain of minimal masks (a mask is dropped
/// whenever a subset mask is present at the same level; the dropped
/// constraint is implied).
pub struct WiseChecker {
    r: u32,
    t: u32,
    levels: Vec<Vec<u128>>,
    count: usize,
}

impl WiseChecker {
    pub fn new(r: u32, t: u32) -> Self {
        assert!(r >= 2);
        WiseChecker {
            r,
            t,
            levels: vec![Vec::new(); (r - 1) as usize],
            count: 0,
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    fn insert_minimal(level: &mut Vec<u128>, x: u128) -> bool {
        for &y in level.iter() {
            if y & !x == 0 {
                // an existing subset mask already implies x
                return false;
            }
        }
        level.retain(|&y| x & !y != 0);
        level.push(x);
        true
    }

    /// Adds a member. Returns the masks newly inserted at the deepest level
    /// ((r-1)-wise intersections), which are the only new binding
    /// constraints for previously vetted candidates once count >= r - 1.
    pub fn add(&mut self, m: KSet) -> Vec<u128> {
        let bits = m.bits();
        let depth = self.levels.len();
        // snapshot-based propagation: level j gains old_level[j-1] & m
        let mut additions: Vec<Vec<u128>> = Vec::with_capacity(depth);
        additions.push(vec![bits]);
        for j in 1..depth {
            let prev = &self.levels[j - 1];
            let mut add_j = Vec::with_capacity(prev.len());
            for &i in prev {
                add_j.push(i & bits);
            }
            add_j.sort_unstable();
            add_j.dedup();
            additions.push(add_j);
        }
        let mut new_deepest = Vec::new();
        for (j, add_j) in additions.into_iter().enumerate() {
            for x in add_j {
                if Self::insert_minimal(&mut self.levels[j], x) && j == depth - 1 {
                    new_deepest.push(x);
                }
            }
        }
        self.count += 1;
        new_deepest
    }

    /// True iff the family stays r-wise t-intersecting after adding `c`
    /// (repetition allowed in the quantifier, so the binding subsets have
    /// min(r-1, count) distinct members besides `c`).
    pub fn compatible(&self, c: KSet) -> bool {
        let bits = c.bits();
        if bits.count_ones() < self.t {
            return false;
        }
        if self.count == 0 {
            return true;
        }
        let lvl = usize::min(self.r as usize - 1, self.count) - 1;
        self.levels[lvl]
            .iter()
            .all(|&i| (i & bits).count_ones() >= self.t)
    }
}

/// True iff every choice of r members with repetition intersects in >= t
/// elements; families with fewer than r members are checked over all
/// subsets of distinct members.
pub fn is_r_wise_t_intersecting(fam: &Family, r: u32, t: u32) -> bool {
    if t == 0 || r < 2 {
        return true;
    }
    let mut checker = WiseChecker::new(r, t);
    for m in fam.members() {
        if !checker.compatible(*m) {
            return false;
        }
        checker.add(*m);
    }
    true
}

/// True iff the r+1 distinct sets form an r-wise t-intersecting family with
/// full intersection of size at most t - 1.
pub fn is_triangle(tuple: &[KSet], r: u32, t: u32) -> Result<bool> {
    if tuple.len() != (r + 1) as usize {
        return Err(Error::Param(format!(
            "triangle tuple must have exactly {} sets, got {}",
            r + 1,
            tuple.len()
        )));
    }
    let distinct: HashSet<u128> = tuple.iter().map(|s| s.bits()).collect();
    if distinct.len() != tuple.len() {
        return Err(Error::Param("triangle tuple has duplicate sets".into()));
    }
    Ok(triangle_unchecked(tuple, t))
}

/// Leave-one-out r-subset intersections >= t, full intersection <= t - 1.
fn triangle_unchecked(tuple: &[KSet], t: u32) -> bool {
    let len = tuple.len();
    let mut prefix = vec![u128::MAX; len + 1];
    let mut suffix = vec![u128::MAX; len + 1];
    for i in 0..len {
        prefix[i + 1] = prefix[i] & tuple[i].bits();
        suffix[len - 1 - i] = suffix[len - i] & tuple[len - 1 - i].bits();
    }
    if prefix[len].count_ones() >= t {
        return false;
    }
    (0..len).all(|j| (prefix[j] & suffix[j + 1]).count_ones() >= t)
}

/// Exact number of (r+1)-subsets of members forming an (r+1,t)-triangle.
///
/// Refuses non-r-wise-t-intersecting input unless `force` is set, since the
/// count is only defined on such families.
pub fn count_triangles(fam: &Family, r: u32, t: u32, force: bool) -> Result<BigUint> {
    if r < 2 || t < 1 {
        return Err(Error::Param("need r >= 2 and t >= 1".into()));
    }
    let intersecting = is_r_wise_t_intersecting(fam, r, t);
    if !intersecting && !force {
        return Err(Error::Precondition(
            "family is not r-wise t-intersecting; pass force to count anyway".into(),
        ));
    }
    let tuple = (r + 1) as usize;
    if fam.len() < tuple {
        return Ok(BigUint::from(0u32));
    }
    let count = if intersecting {
        count_verified(fam.members(), tuple, t, fam.n())
    } else {
        count_forced(fam.members(), r, t)
    };
    Ok(count)
}

/// C(n, k) in u128; callers keep n small enough that this cannot overflow
/// for k <= 8.
fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Counting path for verified families: every <= r members already
/// intersect in >= t, so a tuple is a triangle iff its full intersection
/// drops to <= t - 1. Once a prefix intersection is that small every
/// completion qualifies and is counted combinatorially; a branch whose
/// prefix still meets the remaining members' common core in >= t elements
/// can never drop and is pruned.
fn count_verified(members: &[KSet], tuple: usize, t: u32, n: u32) -> BigUint {
    let len = members.len();
    let mut suffix_core = vec![0u128; len + 1];
    suffix_core[len] = KSet::interval(1, n).bits();
    for i in (0..len).rev() {
        suffix_core[i] = suffix_core[i + 1] & members[i].bits();
    }
    let full = KSet::interval(1, n).bits();
    let mut total: u128 = 0;
    fn rec(
        members: &[KSet],
        suffix_core: &[u128],
        t: u32,
        start: usize,
        slots: usize,
        prefix: u128,
        total: &mut u128,
    ) {
        if slots == 0 {
            // every triangle is counted at the step where the prefix
            // intersection first drops below t; a branch that survives to
            // the end never dropped and is not a triangle
            return;
        }
        let len = members.len();
        if len - start < slots {
            return;
        }
        for i in start..=(len - slots) {
            let p = prefix & members[i].bits();
            if p.count_ones() < t {
                *total += binom_u128(len - i - 1, slots - 1);
            } else if (p & suffix_core[i + 1]).count_ones() < t {
                rec(members, suffix_core, t, i + 1, slots - 1, p, total);
            }
        }
    }
    rec(members, &suffix_core, t, 0, tuple, full, &mut total);
    BigUint::from(total)
}

/// Counting path for forced (possibly non-intersecting) input: full
/// definition check per tuple, pruning prefixes whose intersection already
/// dropped below t (some r-subset of any completion would violate).
fn count_forced(members: &[KSet], r: u32, t: u32) -> BigUint {
    let tuple = (r + 1) as usize;
    let mut total: u128 = 0;
    let mut chosen: Vec<KSet> = Vec::with_capacity(tuple);
    fn rec(
        members: &[KSet],
        t: u32,
        tuple: usize,
        start: usize,
        chosen: &mut Vec<KSet>,
        prefix: u128,
        total: &mut u128,
    ) {
        if chosen.len() == tuple {
            if triangle_unchecked(chosen, t) {
                *total += 1;
            }
            return;
        }
        let slots = tuple - chosen.len();
        let len = members.len();
        if len - start < slots {
            return;
        }
        for i in start..=(len - slots) {
            let p = prefix & members[i].bits();
            // prefixes of size <= r with intersection < t cannot extend to
            // a triangle; the last slot may drop below t
            if chosen.len() + 1 < tuple && p.count_ones() < t {
                continue;
            }
            chosen.push(members[i]);
            rec(members, t, tuple, i + 1, chosen, p, total);
            chosen.pop();
        }
    }
    rec(members, t, tuple, 0, &mut chosen, u128::MAX, &mut total);
    BigUint::from(total)
}

/// True iff some t-set is contained in every member, i.e. the common core
/// has at least t elements.
pub fn is_trivial(fam: &Family, t: u32) -> bool {
    fam.common_core().len() >= t
}

/// True iff no k-set outside the family preserves the r-wise t-intersecting
/// property. Errors when the input itself is not r-wise t-intersecting.
pub fn is_maximal(fam: &Family, r: u32, t: u32) -> Result<bool> {
    let mut checker = WiseChecker::new(r, t);
    for m in fam.members() {
        if !checker.compatible(*m) {
            return Err(Error::Precondition(
                "family is not r-wise t-intersecting".into(),
            ));
        }
        checker.add(*m);
    }
    for g in k_subsets(fam.n(), fam.k()) {
        if !fam.contains(&g) && checker.compatible(g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy deterministic completion to a maximal family: candidates are
/// scanned once in canonical bit-vector order and added whenever
/// compatible. A candidate rejected against a subfamily stays incompatible
/// with every superfamily, so one pass reaches a maximal family.
pub fn saturate(fam: &Family, r: u32, t: u32) -> Result<Family> {
    let mut checker = WiseChecker::new(r, t);
    for m in fam.members() {
        if !checker.compatible(*m) {
            return Err(Error::Precondition(
                "family is not r-wise t-intersecting".into(),
            ));
        }
        checker.add(*m);
    }
    let mut out: Vec<KSet> = fam.members().to_vec();
    for g in k_subsets(fam.n(), fam.k()) {
        if !fam.contains(&g) && checker.compatible(g) {
            checker.add(g);
            out.push(g);
        }
    }
    Family::new(fam.n(), fam.k(), out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u32, k: u32, sets: &[&[u32]]) -> Family {
        let members = sets
            .iter()
            .map(|s| KSet::from_elems(s, n).unwrap())
            .collect();
        Family::new(n, k, members).unwrap()
    }

    #[test]
    fn construction_rejects_duplicates_and_bad_sizes() {
        let n = 5;
        let a = KSet::from_elems(&[1, 2], n).unwrap();
        assert!(Family::new(n, 2, vec![a, a]).is_err());
        let b = KSet::from_elems(&[1, 2, 3], n).unwrap();
        assert!(Family::new(n, 2, vec![a, b]).is_err());
    }

    #[test]
    fn r_wise_examples() {
        let tri = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_r_wise_t_intersecting(&tri, 2, 1));
        assert!(!is_r_wise_t_intersecting(&tri, 3, 1));
    }

    #[test]
    fn r_wise_single_member_needs_k_ge_t() {
        let f = fam(5, 2, &[&[1, 2]]);
        assert!(is_r_wise_t_intersecting(&f, 2, 2));
        assert!(!is_r_wise_t_intersecting(&f, 2, 3));
    }

    #[test]
    fn triangle_examples() {
        let n = 6;
        let s = |e: &[u32]| KSet::from_elems(e, n).unwrap();
        assert!(is_triangle(&[s(&[1, 2]), s(&[1, 3]), s(&[2, 3])], 2, 1).unwrap());
        assert!(!is_triangle(&[s(&[1, 2]), s(&[1, 3]), s(&[1, 4])], 2, 1).unwrap());
        assert!(!is_triangle(
            &[s(&[1, 2, 3, 5]), s(&[1, 2, 3, 6]), s(&[1, 2, 4, 5])],
            2,
            2
        )
        .unwrap());
        // wrong arity and duplicates are errors
        assert!(is_triangle(&[s(&[1, 2]), s(&[1, 3])], 2, 1).is_err());
        assert!(is_triangle(&[s(&[1, 2]), s(&[1, 2]), s(&[2, 3])], 2, 1).is_err());
    }

    #[test]
    fn count_triangles_examples() {
        let tri = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(count_triangles(&tri, 2, 1, false).unwrap(), BigUint::from(1u32));
        // not 2-wise 2-intersecting: refuse without force
        assert!(count_triangles(&tri, 2, 2, false).is_err());
        assert_eq!(count_triangles(&tri, 2, 2, true).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn trivial_examples() {
        let f = fam(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(is_trivial(&f, 2));
        let tri = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(!is_trivial(&tri, 1));
    }

    #[test]
    fn maximal_and_saturate_examples() {
        let tri = fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_maximal(&tri, 2, 1).unwrap());
        assert_eq!(saturate(&tri, 2, 1).unwrap(), tri);

        let partial = fam(5, 2, &[&[1, 2], &[1, 3]]);
        assert!(!is_maximal(&partial, 2, 1).unwrap());
        let sat = saturate(&partial, 2, 1).unwrap();
        assert!(is_maximal(&sat, 2, 1).unwrap());
        assert!(is_r_wise_t_intersecting(&sat, 2, 1));
        for m in partial.members() {
            assert!(sat.contains(m));
        }

        let not_intersecting = fam(5, 2, &[&[1, 2], &[3, 4]]);
        assert!(is_maximal(&not_intersecting, 2, 1).is_err());
        assert!(saturate(&not_intersecting, 2, 1).is_err());
    }

    #[test]
    fn saturate_seeded_triple_n4() {
        let seed = fam(4, 3, &[&[1, 2, 3]]);
        let sat = saturate(&seed, 2, 2).unwrap();
        assert!(is_maximal(&sat, 2, 2).unwrap());
        // every member meets {1,2,3} in >= 2 elements
        let core = KSet::from_elems(&[1, 2, 3], 4).unwrap();
        for m in sat.members() {
            assert!(m.intersect(core).len() >= 2);
        }
    }

    #[test]
    fn relabel_is_involutive_on_identity() {
        let tri = fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let perm: Vec<u32> = vec![5, 4, 3, 2, 1];
        let rel = tri.relabel(&perm).unwrap();
        assert_eq!(rel.len(), tri.len());
        assert_eq!(
            count_triangles(&rel, 2, 1, false).unwrap(),
            count_triangles(&tri, 2, 1, false).unwrap()
        );
    }
}
