//! Search for triangle-rich maximal families: complete enumeration for
//! r = 2 via maximal cliques of the t-intersection graph with isomorphism
//! rejection, and seeded stochastic saturation for general r.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::family::{count_triangles, is_trivial, Family, Params, WiseChecker};
use crate::fileio::FamilyFile;
use crate::formulas::{binomial, exact_count_g};
use crate::kset::{k_subsets, KSet};
use crate::{Error, Result};

/// Exact canonicalization is bounded to families whose support (union of
/// members) has at most this many elements.
pub const CANONICAL_SUPPORT_CAP: u32 = 10;

/// Permutation-invariant byte string: equal iff the families are
/// isomorphic. Minimizes the sorted member-mask list over all relabelings
/// of the support that respect degree classes (degrees are invariants, so
/// restricting to class-respecting maps loses nothing). Elements outside
/// every member form one interchangeable class and do not appear.
pub fn canonical_form(fam: &Family) -> Result<Vec<u8>> {
    let support = fam.support();
    let s = support.len();
    if s > CANONICAL_SUPPORT_CAP {
        return Err(Error::Infeasible(format!(
            "support of {s} elements exceeds the exact canonicalization cap of {CANONICAL_SUPPORT_CAP}"
        )));
    }
    let elems = support.elems();
    let degree = |e: u32| -> u32 {
        fam.members().iter().filter(|m| m.contains(e)).count() as u32
    };
    // degree classes in ascending degree order; labels are assigned to
    // classes in blocks
    let mut by_degree: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut degs: Vec<u32> = elems.iter().map(|&e| degree(e)).collect();
    degs.sort_unstable();
    degs.dedup();
    for d in degs {
        let class: Vec<u32> = elems.iter().copied().filter(|&e| degree(e) == d).collect();
        by_degree.push((d, class));
    }

    let mut label: Vec<u16> = vec![0; 129]; // label[element] = bit position
    let mut best: Option<Vec<u16>> = None;

    fn assign_classes(
        classes: &[(u32, Vec<u32>)],
        class_idx: usize,
        offset: u16,
        label: &mut Vec<u16>,
        fam: &Family,
        best: &mut Option<Vec<u16>>,
    ) {
        if class_idx == classes.len() {
            let mut masks: Vec<u16> = fam
                .members()
                .iter()
                .map(|m| {
                    let mut bits: u16 = 0;
                    for e in m.elems() {
                        bits |= 1u16 << label[e as usize];
                    }
                    bits
                })
                .collect();
            masks.sort_unstable();
            match best {
                Some(b) if *b <= masks => {}
                _ => *best = Some(masks),
            }
            return;
        }
        let class = &classes[class_idx].1;
        let mut order: Vec<u32> = class.clone();
        permute(&mut order, 0, &mut |perm| {
            for (i, &e) in perm.iter().enumerate() {
                label[e as usize] = offset + i as u16;
            }
            assign_classes(classes, class_idx + 1, offset + class.len() as u16, label, fam, best);
        });
    }

    // in-place permutation generator (Heap's algorithm shape, recursive)
    fn permute(items: &mut Vec<u32>, start: usize, f: &mut dyn FnMut(&Vec<u32>)) {
        if start == items.len() {
            f(items);
            return;
        }
        for i in start..items.len() {
            items.swap(start, i);
            permute(items, start + 1, f);
            items.swap(start, i);
        }
    }

    // rebind to satisfy the recursive helper's signature
    fn assign_entry(
        classes: &[(u32, Vec<u32>)],
        label: &mut Vec<u16>,
        fam: &Family,
        best: &mut Option<Vec<u16>>,
    ) {
        assign_classes(classes, 0, 0, label, fam, best);
    }
    assign_entry(&by_degree, &mut label, fam, &mut best);

    let masks = best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(8 + masks.len() * 2);
    bytes.push(0u8); // exact-form marker
    bytes.push(fam.n() as u8);
    bytes.push(fam.k() as u8);
    bytes.push(s as u8);
    bytes.extend((masks.len() as u32).to_le_bytes());
    for m in masks {
        bytes.extend(m.to_le_bytes());
    }
    Ok(bytes)
}

/// Invariant fingerprint fallback for large supports: sorted element
/// degree sequence. Isomorphic families always agree; distinct families
/// may collide (over-merging is flagged by callers).
pub fn fingerprint(fam: &Family) -> Vec<u8> {
    let mut degrees = vec![0u32; fam.n() as usize + 1];
    for m in fam.members() {
        for e in m.elems() {
            degrees[e as usize] += 1;
        }
    }
    let mut seq: Vec<u32> = degrees.into_iter().filter(|&d| d > 0).collect();
    seq.sort_unstable();
    let mut bytes = Vec::with_capacity(16 + seq.len() * 4);
    bytes.push(1u8); // fingerprint marker
    bytes.push(fam.n() as u8);
    bytes.push(fam.k() as u8);
    bytes.extend((fam.len() as u32).to_le_bytes());
    for d in seq {
        bytes.extend(d.to_le_bytes());
    }
    bytes
}

/// Exact isomorphism test with no support cap: backtracking assignment of
/// support elements, most-constrained (highest degree) first, pruned by
/// degree equality and by requiring every partially-mapped member trace to
/// fit inside some member of `b`. At a full assignment the trace condition
/// forces every image to be an actual member, so no final check is needed.
pub fn is_isomorphic(a: &Family, b: &Family) -> bool {
    if a.k() != b.k() || a.len() != b.len() {
        return false;
    }
    let sa = a.support().elems();
    let sb = b.support().elems();
    if sa.len() != sb.len() {
        return false;
    }
    let deg = |f: &Family, e: u32| f.members().iter().filter(|m| m.contains(e)).count() as u32;
    let da: Vec<u32> = sa.iter().map(|&e| deg(a, e)).collect();
    let db: Vec<u32> = sb.iter().map(|&e| deg(b, e)).collect();
    {
        let mut x = da.clone();
        let mut y = db.clone();
        x.sort_unstable();
        y.sort_unstable();
        if x != y {
            return false;
        }
    }
    let mut order: Vec<usize> = (0..sa.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(da[i]));

    struct Ctx<'x> {
        a: &'x Family,
        b: &'x Family,
        sa: &'x [u32],
        sb: &'x [u32],
        da: &'x [u32],
        db: &'x [u32],
        order: &'x [usize],
        image: Vec<u32>,   // image[element of a] = element of b
        assigned: u128,    // mask over a's elements
        used: Vec<bool>,   // over sb indices
    }

    fn consistent(ctx: &Ctx) -> bool {
        'members: for m in ctx.a.members() {
            let trace = m.bits() & ctx.assigned;
            if trace == 0 {
                continue;
            }
            let mut img: u128 = 0;
            let mut bits = trace;
            while bits != 0 {
                let e = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                img |= 1u128 << (ctx.image[e as usize] - 1);
            }
            for bm in ctx.b.members() {
                if img & bm.bits() == img {
                    continue 'members;
                }
            }
            return false;
        }
        true
    }

    fn rec(ctx: &mut Ctx, depth: usize) -> bool {
        if depth == ctx.order.len() {
            return true;
        }
        let i = ctx.order[depth];
        let x = ctx.sa[i];
        for j in 0..ctx.sb.len() {
            if ctx.used[j] || ctx.db[j] != ctx.da[i] {
                continue;
            }
            ctx.used[j] = true;
            ctx.image[x as usize] = ctx.sb[j];
            ctx.assigned |= 1u128 << (x - 1);
            if consistent(ctx) && rec(ctx, depth + 1) {
                return true;
            }
            ctx.assigned &= !(1u128 << (x - 1));
            ctx.used[j] = false;
        }
        false
    }

    let mut ctx = Ctx {
        a,
        b,
        sa: &sa,
        sb: &sb,
        da: &da,
        db: &db,
        order: &order,
        image: vec![0; 129],
        assigned: 0,
        used: vec![false; sb.len()],
    };
    rec(&mut ctx, 0)
}

/// 256-bit set for clique search over up to 200 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
struct VSet([u128; 2]);

impl VSet {
    fn insert(&mut self, i: usize) {
        self.0[i / 128] |= 1u128 << (i % 128);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 128] &= !(1u128 << (i % 128));
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 128] & (1u128 << (i % 128)) != 0
    }
    fn is_empty(&self) -> bool {
        self.0[0] == 0 && self.0[1] == 0
    }
    fn and(&self, o: &VSet) -> VSet {
        VSet([self.0[0] & o.0[0], self.0[1] & o.0[1]])
    }
    fn count(&self) -> u32 {
        self.0[0].count_ones() + self.0[1].count_ones()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..2).flat_map(move |w| {
            let mut bits = self.0[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 128 + i)
                }
            })
        })
    }
}

fn bron_kerbosch(
    adj: &[VSet],
    clique: &mut Vec<usize>,
    mut cand: VSet,
    mut excl: VSet,
    out: &mut Vec<Vec<usize>>,
) {
    if cand.is_empty() && excl.is_empty() {
        out.push(clique.clone());
        return;
    }
    // pivot: candidate or excluded vertex with most candidate neighbours
    let pivot = cand
        .iter()
        .chain(excl.iter())
        .max_by_key(|&v| cand.and(&adj[v]).count())
        .unwrap();
    let branch: Vec<usize> = cand
        .iter()
        .filter(|&v| !adj[pivot].contains(v))
        .collect();
    for v in branch {
        clique.push(v);
        bron_kerbosch(adj, clique, cand.and(&adj[v]), excl.and(&adj[v]), out);
        clique.pop();
        cand.remove(v);
        excl.insert(v);
    }
}

/// Result of the exhaustive r = 2 enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// One representative per isomorphism class, in first-seen order.
    pub classes: Vec<Family>,
    /// Total maximal cliques visited before deduplication.
    pub total_maximal: u64,
    /// Always true: dedup uses exact isomorphism tests. Kept in the report
    /// so consumers can assert it.
    pub exact_dedup: bool,
}

/// Every maximal 2-wise t-intersecting family on C([n], k), one per
/// isomorphism class. Maximal families are exactly the maximal cliques of
/// the t-intersection graph on all k-sets.
pub fn enumerate_maximal_r2(n: u32, k: u32, t: u32) -> Result<Enumeration> {
    if t < 1 || t > k {
        return Err(Error::Param(format!("need 1 <= t <= k, got t={t}, k={k}")));
    }
    let vertex_count = binomial(n as i64, k as i64);
    if vertex_count > BigUint::from(200u32) {
        return Err(Error::Infeasible(format!(
            "C({n},{k}) = {vertex_count} vertices exceeds the enumeration gate of 200"
        )));
    }
    let vertices: Vec<KSet> = k_subsets(n, k).collect();
    let m = vertices.len();
    let mut adj = vec![VSet::default(); m];
    for i in 0..m {
        for j in (i + 1)..m {
            if vertices[i].intersect(vertices[j]).len() >= t {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut cand = VSet::default();
    for i in 0..m {
        cand.insert(i);
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, &mut Vec::new(), cand, VSet::default(), &mut cliques);

    // bucket by the cheap invariant fingerprint, then exact isomorphism
    // inside each bucket; dedup is exact at every support size
    let mut buckets: std::collections::HashMap<Vec<u8>, Vec<usize>> = std::collections::HashMap::new();
    let mut classes: Vec<Family> = Vec::new();
    for clique in &cliques {
        let members: Vec<KSet> = clique.iter().map(|&i| vertices[i]).collect();
        let fam = Family::new(n, k, members)?;
        let ids = buckets.entry(fingerprint(&fam)).or_default();
        if !ids.iter().any(|&i| is_isomorphic(&classes[i], &fam)) {
            ids.push(classes.len());
            classes.push(fam);
        }
    }
    Ok(Enumeration {
        classes,
        total_maximal: cliques.len() as u64,
        exact_dedup: true,
    })
}

/// Report of a stochastic (or exhaustive, via the CLI) search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub t: u32,
    pub seed: u64,
    pub budget: u64,
    pub families_examined: u64,
    /// Saturations that ended trivial, counted as 0 without enumeration.
    pub trivial_shortcuts: u64,
    /// Decimal string, exact.
    pub best_count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best_family: Option<FamilyFile>,
    pub complete: bool,
    /// Best count exceeds the exact G count; the interesting case.
    pub exceedance: bool,
    pub exact_count_g: String,
}

/// One random maximal family: grow from nothing by repeatedly adding a
/// uniformly random compatible candidate until none remain. Candidate
/// filtering is incremental: once at least r-1 members are present, only
/// the newly created (r-1)-wise intersection masks can invalidate a
/// previously vetted candidate.
pub fn random_maximal_family(params: Params, rng: &mut ChaCha8Rng) -> Family {
    let Params { n, k, r, t } = params;
    let mut checker = WiseChecker::new(r, t);
    let mut members: Vec<KSet> = Vec::new();
    let mut candidates: Vec<KSet> = k_subsets(n, k).filter(|c| c.len() >= t).collect();
    while !candidates.is_empty() {
        let idx = rng.gen_range(0..candidates.len());
        let chosen = candidates.swap_remove(idx);
        let new_masks = checker.add(chosen);
        members.push(chosen);
        if checker.count() < r as usize - 1 {
            candidates.retain(|c| checker.compatible(*c));
        } else {
            candidates.retain(|c| {
                new_masks
                    .iter()
                    .all(|&mask| (mask & c.bits()).count_ones() >= t)
            });
        }
    }
    Family::new(n, k, members).expect("random growth produces a valid family")
}

/// Runs `budget` random saturations under a deterministic generator and
/// reports the best triangle count seen.
pub fn stochastic_search(params: Params, seed: u64, budget: u64) -> Result<SearchReport> {
    params.validate()?;
    let reference = exact_count_g(params.n, params.k, params.r, params.t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_count = BigUint::zero();
    let mut best_family: Option<Family> = None;
    let mut shortcuts = 0u64;
    for _ in 0..budget {
        let fam = random_maximal_family(params, &mut rng);
        let count = if is_trivial(&fam, params.t) {
            shortcuts += 1;
            BigUint::zero()
        } else {
            count_triangles(&fam, params.r, params.t, false)?
        };
        if count > best_count || best_family.is_none() {
            best_count = count;
            best_family = Some(fam);
        }
    }
    let exceedance = best_count > reference;
    Ok(SearchReport {
        n: params.n,
        k: params.k,
        r: params.r,
        t: params.t,
        seed,
        budget,
        families_examined: budget,
        trivial_shortcuts: shortcuts,
        best_count: best_count.to_string(),
        best_family: best_family
            .map(|f| FamilyFile::from_family(&f, Some(params.r), Some(params.t))),
        complete: false,
        exceedance,
        exact_count_g: reference.to_string(),
    })
}

/// Multi-worker variant: worker i runs an independent search with seed
/// seed+i and an equal budget share; results merge by maximum count with a
/// deterministic tie-break. Byte-identical reproducibility is only
/// guaranteed for a single worker.
pub fn stochastic_search_parallel(
    params: Params,
    seed: u64,
    budget: u64,
    workers: u32,
) -> Result<SearchReport> {
    if workers <= 1 {
        return stochastic_search(params, seed, budget);
    }
    let share = budget / workers as u64;
    let extra = budget % workers as u64;
    let mut handles = Vec::new();
    for w in 0..workers as u64 {
        let b = share + if w < extra { 1 } else { 0 };
        handles.push(std::thread::spawn(move || {
            stochastic_search(params, seed + w, b)
        }));
    }
    let mut reports: Vec<SearchReport> = Vec::new();
    for h in handles {
        reports.push(h.join().expect("search worker panicked")?);
    }
    let mut merged = reports
        .iter()
        .max_by(|a, b| {
            let ca: BigUint = a.best_count.parse().unwrap();
            let cb: BigUint = b.best_count.parse().unwrap();
            ca.cmp(&cb)
                .then_with(|| b.seed.cmp(&a.seed)) // prefer lowest worker seed
        })
        .unwrap()
        .clone();
    merged.seed = seed;
    merged.budget = budget;
    merged.families_examined = reports.iter().map(|r| r.families_examined).sum();
    merged.trivial_shortcuts = reports.iter().map(|r| r.trivial_shortcuts).sum();
    merged.exceedance = reports.iter().any(|r| r.exceedance);
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{is_maximal, is_r_wise_t_intersecting};

    fn fam(n: u32, k: u32, sets: &[&[u32]]) -> Family {
        let members = sets
            .iter()
            .map(|s| KSet::from_elems(s, n).unwrap())
            .collect();
        Family::new(n, k, members).unwrap()
    }

    #[test]
    fn canonical_form_relabeling() {
        let a = fam(6, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let b = fam(6, 2, &[&[4, 5], &[4, 6], &[5, 6]]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());

        let c = fam(6, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn canonical_form_refuses_large_support() {
        let members: Vec<&[u32]> = vec![
            &[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6],
            &[1, 7], &[1, 8], &[1, 9], &[1, 10], &[1, 11],
        ];
        let f = fam(12, 2, &members);
        assert!(matches!(canonical_form(&f), Err(Error::Infeasible(_))));
        // fingerprint still distinguishes star from triangle shape
        let tri = fam(12, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_ne!(fingerprint(&f), fingerprint(&tri));
    }

    #[test]
    fn enumerate_n5_k2_two_classes() {
        let en = enumerate_maximal_r2(5, 2, 1).unwrap();
        assert_eq!(en.classes.len(), 2);
        for f in &en.classes {
            assert!(is_maximal(f, 2, 1).unwrap());
            assert!(is_r_wise_t_intersecting(f, 2, 1));
        }
        let sizes: Vec<usize> = en.classes.iter().map(|f| f.len()).collect();
        assert!(sizes.contains(&3)); // triangle
        assert!(sizes.contains(&4)); // star
        assert!(en.exact_dedup);
    }

    #[test]
    fn enumeration_gate() {
        assert!(matches!(
            enumerate_maximal_r2(30, 3, 1),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn stochastic_small_finds_triangle() {
        let params = Params::new(5, 2, 2, 1).unwrap();
        let report = stochastic_search(params, 1, 50).unwrap();
        assert_eq!(report.best_count, "1");
        assert!(!report.exceedance);
        assert_eq!(report.families_examined, 50);
    }

    #[test]
    fn stochastic_deterministic() {
        let params = Params::new(8, 3, 2, 1).unwrap();
        let a = stochastic_search(params, 7, 30).unwrap();
        let b = stochastic_search(params, 7, 30).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn stochastic_zero_budget() {
        let params = Params::new(8, 3, 2, 1).unwrap();
        let report = stochastic_search(params, 1, 0).unwrap();
        assert_eq!(report.best_count, "0");
        assert!(report.best_family.is_none());
        assert!(!report.complete);
    }

    #[test]
    fn random_maximal_is_maximal() {
        let params = Params::new(9, 4, 3, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let f = random_maximal_family(params, &mut rng);
            assert!(is_r_wise_t_intersecting(&f, 3, 1));
            assert!(is_maximal(&f, 3, 1).unwrap());
        }
    }
}
