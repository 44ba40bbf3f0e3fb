//! Named verification suites backed by naive reference implementations.
//!
//! The fast paths elsewhere in the crate (incremental checkers, pruned
//! counters, branch-and-bound cover search) are cross-checked here against
//! straightforward definitional code that shares nothing with them.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{build_frankl, build_gprime, build_trivial, build_two_block};
use crate::covers::{classify_cover_family, covering_number, min_covers, Classification};
use crate::family::{count_triangles, is_maximal, saturate, Params};
use crate::formulas::{exact_count_g, intersection_floor, lower_bound_l21, size_bounds_l24};
use crate::hypergraph::{
    build_cover_hypergraph, decompose, verdict_consequence, ConsequenceOutcome, Verdict,
};
use crate::kset::{k_subsets, KSet};
use crate::search::random_maximal_family;
use crate::{Error, Family, Result};

/// Definitional implementations, deliberately slow and deliberately
/// disjoint from the production code paths they are used to check.
pub mod naive {
    use super::*;

    fn for_each_combination(m: usize, c: usize, f: &mut impl FnMut(&[usize])) {
        fn rec(start: usize, m: usize, left: usize, idx: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if left == 0 {
                f(idx);
                return;
            }
            for i in start..=(m - left) {
                idx.push(i);
                rec(i + 1, m, left - 1, idx, f);
                idx.pop();
            }
        }
        if c > m {
            return;
        }
        rec(0, m, c, &mut Vec::new(), f);
    }

    /// Every subfamily of size 1..=r must have a common t-element part.
    pub fn is_r_wise_t_intersecting(fam: &Family, r: u32, t: u32) -> bool {
        let ms = fam.members();
        for c in 1..=(r as usize).min(ms.len()) {
            let mut ok = true;
            for_each_combination(ms.len(), c, &mut |idx| {
                let and = idx.iter().fold(!0u128, |a, &i| a & ms[i].bits());
                if and.count_ones() < t {
                    ok = false;
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }

    /// Tuple-by-tuple triangle count: every r of the r+1 members share t
    /// elements, all r+1 together do not.
    pub fn count_triangles(fam: &Family, r: u32, t: u32) -> BigUint {
        let ms = fam.members();
        let mut count = BigUint::zero();
        for_each_combination(ms.len(), (r + 1) as usize, &mut |idx| {
            let all = idx.iter().fold(!0u128, |a, &i| a & ms[i].bits());
            if all.count_ones() >= t {
                return;
            }
            for drop in 0..idx.len() {
                let and = idx
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != drop)
                    .fold(!0u128, |a, (_, &i)| a & ms[i].bits());
                if and.count_ones() < t {
                    return;
                }
            }
            count += 1u32;
        });
        count
    }

    /// Scan every subset of the ground set by size. None when no t-cover
    /// exists at all (possible only for the empty family, which has none
    /// by our convention of rejecting it upstream).
    pub fn covering_number(fam: &Family, t: u32) -> Option<u32> {
        for s in t..=fam.n() {
            for cand in k_subsets(fam.n(), s) {
                if crate::covers::is_t_cover(cand, fam, t) {
                    return Some(s);
                }
            }
        }
        None
    }

    pub fn min_covers(fam: &Family, t: u32) -> Vec<KSet> {
        let tau = match covering_number(fam, t) {
            Some(s) => s,
            None => return Vec::new(),
        };
        k_subsets(fam.n(), tau)
            .filter(|c| crate::covers::is_t_cover(*c, fam, t))
            .collect()
    }

    /// Maximal iff no absent k-set keeps the family r-wise t-intersecting.
    pub fn is_maximal(fam: &Family, r: u32, t: u32) -> bool {
        for cand in k_subsets(fam.n(), fam.k()) {
            if fam.contains(&cand) {
                continue;
            }
            let mut ext = fam.members().to_vec();
            ext.push(cand);
            let ext = Family::new(fam.n(), fam.k(), ext).unwrap();
            if is_r_wise_t_intersecting(&ext, r, t) {
                return false;
            }
        }
        true
    }
}

/// A 2-wise t-intersecting family whose saturation has exactly two minimum
/// t-covers, [t] u {t+1} and [t] u {t+2}. The Frankl construction cannot
/// reach this case: at ell = t+2 it coincides with G'_{2,t} and all four
/// (t+1)-subsets of [t+2] are covers. The member [t] u S (S fresh) kills
/// the covers that avoid part of [t].
pub fn case2_witness(n: u32, k: u32, t: u32) -> Result<Family> {
    if t < 1 || k < t + 1 || n < k + 2 {
        return Err(Error::Param(format!(
            "case2 witness needs 1 <= t, k >= t+1, n >= k+2; got n={n}, k={k}, t={t}"
        )));
    }
    let tmask = KSet::interval(1, t);
    let ab = KSet::interval(t + 1, t + 2);
    let s = KSet::interval(t + 3, k + 2);
    let f0 = tmask.union(s);
    let members = k_subsets(n, k)
        .filter(|f| {
            let in_t = f.intersect(tmask).len();
            (in_t == t && !f.intersect(ab).is_empty())
                || *f == f0
                || (in_t == t - 1 && ab.is_subset_of(*f) && !f.intersect(s).is_empty())
        })
        .collect();
    Family::new(n, k, members)
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// The offending family, when the failed check has one at hand.
    pub counterexample: Option<crate::fileio::FamilyFile>,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub max_n: u32,
    pub max_k: u32,
    pub seed: u64,
    /// Random saturated families drawn for the intersection-floor suite.
    pub floor_samples: u64,
    /// Random families drawn for the brute-force cover comparison.
    pub cover_samples: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_n: 9, max_k: 5, seed: 0, floor_samples: 1000, cover_samples: 200 }
    }
}

/// Parameter grid shared by the formula suites: r in {2, 3}, t up to k - r.
fn grid(max_n: u32, max_k: u32, min_slack: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for r in 2..=3u32 {
        for k in (r + 1)..=max_k {
            for t in 1..=(k - r) {
                for n in (k + min_slack).max(r + t)..=max_n {
                    out.push((n, k, r, t));
                }
            }
        }
    }
    out
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.to_string(), passed, detail, counterexample: None }
}

fn random_family(rng: &mut ChaCha8Rng, max_n: u32) -> (Family, u32) {
    let n = rng.gen_range(4..=max_n);
    let k = rng.gen_range(2..=n.min(6));
    let t = rng.gen_range(1..=k);
    let all: Vec<KSet> = k_subsets(n, k).collect();
    let m = rng.gen_range(1..=8usize);
    let mut picked = Vec::new();
    for _ in 0..m {
        let s = all[rng.gen_range(0..all.len())];
        if !picked.contains(&s) {
            picked.push(s);
        }
    }
    (Family::new(n, k, picked).unwrap(), t)
}

/// Fast triangle counter, r-wise checker, maximality test, and cover search
/// against the definitional versions, on the G grid and on random input.
pub fn suite_oracle(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut checks = Vec::new();

    let g = grid(opts.max_n, opts.max_k, 0);
    let mut bad = None;
    for &(n, k, r, t) in &g {
        let fam = crate::constructions::build_g(n, k, r, t)?;
        let formula = exact_count_g(n, k, r, t)?;
        let counted = count_triangles(&fam, r, t, false)?;
        if formula != counted {
            bad = Some(format!("(n={n},k={k},r={r},t={t}): formula {formula}, counted {counted}"));
            break;
        }
    }
    checks.push(check(
        "exact_count_g == count_triangles(build_g) on grid",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} grid points agree", g.len())),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut bad = None;
    let mut compared = 0u32;
    for _ in 0..60 {
        let (fam, t) = random_family(&mut rng, 8);
        for r in 2..=3u32 {
            let fast = crate::family::is_r_wise_t_intersecting(&fam, r, t);
            let slow = naive::is_r_wise_t_intersecting(&fam, r, t);
            if fast != slow {
                bad = Some(format!("r-wise mismatch at n={}, k={}, r={r}, t={t}", fam.n(), fam.k()));
                continue;
            }
            let fast_ct = count_triangles(&fam, r, t, true)?;
            let slow_ct = naive::count_triangles(&fam, r, t);
            if fast_ct != slow_ct {
                bad = Some(format!(
                    "triangle count mismatch at n={}, k={}, r={r}, t={t}: {fast_ct} vs {slow_ct}",
                    fam.n(),
                    fam.k()
                ));
            }
            if slow && is_maximal(&fam, r, t)? != naive::is_maximal(&fam, r, t) {
                bad = Some(format!("maximality mismatch at n={}, k={}, r={r}, t={t}", fam.n(), fam.k()));
            }
            compared += 1;
        }
    }
    checks.push(check(
        "random families: r-wise check, forced triangle count, maximality vs naive",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{compared} (family, r) pairs agree")),
    ));

    Ok(SuiteResult { suite: "oracle".into(), checks })
}

/// The 999/1000 lower bound at n = k^4, and G' counting the same number of
/// triangles as G.
pub fn suite_lemma21(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut checks = Vec::new();

    let mut bad = None;
    for &(r, t, k) in &[(2u32, 1u32, 3u32), (2, 2, 4), (3, 1, 4), (3, 2, 5)] {
        let n = k.pow(4);
        let count = exact_count_g(n, k, r, t)?;
        let bound = lower_bound_l21(n, k, r, t)?;
        if bound.below_hypothesis {
            bad = Some(format!("(r={r},t={t},k={k}): n={n} flagged below hypothesis"));
            break;
        }
        if BigRational::from_integer(count.clone().into()) < bound.value {
            bad = Some(format!("(r={r},t={t},k={k}): count {count} under bound {}", bound.value));
            break;
        }
    }
    checks.push(check(
        "exact count of G meets the 999/1000 bound at n = k^4",
        bad.is_none(),
        bad.unwrap_or_else(|| "4 parameter sets pass".into()),
    ));

    let g = grid(opts.max_n, opts.max_k, 0);
    let mut bad = None;
    for &(n, k, r, t) in &g {
        let gp = build_gprime(n, k, r, t)?;
        let counted = count_triangles(&gp, r, t, false)?;
        if counted != exact_count_g(n, k, r, t)? {
            bad = Some(format!("(n={n},k={k},r={r},t={t}): G' count {counted} differs from G"));
            break;
        }
    }
    checks.push(check(
        "G and G' count the same triangles on grid",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} grid points agree", g.len())),
    ));

    Ok(SuiteResult { suite: "lemma21".into(), checks })
}

/// Cover search vs subset scan, and the tau = t+1 classification patterns
/// with their "moreover" clause.
pub fn suite_lemma23(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut checks = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(23));
    let mut bad = None;
    for _ in 0..opts.cover_samples {
        let (fam, t) = random_family(&mut rng, 10);
        let fast = covering_number(&fam, t)?;
        let slow = naive::covering_number(&fam, t);
        if Some(fast) != slow {
            bad = Some(format!("tau mismatch at n={}, k={}, t={t}: {fast} vs {slow:?}", fam.n(), fam.k()));
            break;
        }
        let mut fast_mc = min_covers(&fam, t)?;
        let mut slow_mc = naive::min_covers(&fam, t);
        fast_mc.sort_by_key(|s| s.bits());
        slow_mc.sort_by_key(|s| s.bits());
        if fast_mc != slow_mc {
            bad = Some(format!("min-cover set mismatch at n={}, k={}, t={t}", fam.n(), fam.k()));
            break;
        }
    }
    checks.push(check(
        "covering number and minimum covers vs subset scan on random families",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} random families agree", opts.cover_samples)),
    ));

    // (n, k, t, ell, expected classification); at ell = t+2 the Frankl
    // family equals G'_{2,t}, so the expected outcome there is FullSimplex
    let frankl_cases: &[(u32, u32, u32, u32, Classification)] = &[
        (12, 4, 1, 3, Classification::FullSimplex),
        (12, 4, 1, 4, Classification::Case3(4)),
        (12, 4, 1, 5, Classification::Case3(5)),
        (12, 4, 2, 4, Classification::FullSimplex),
        (12, 4, 2, 5, Classification::Case3(5)),
        (12, 5, 2, 4, Classification::FullSimplex),
        (12, 5, 2, 5, Classification::Case3(5)),
        (12, 5, 2, 6, Classification::Case3(6)),
    ];
    let mut bad = None;
    let mut reports = Vec::new();
    for &(n, k, t, ell, expected) in frankl_cases {
        let fam = saturate(&build_frankl(n, k, t, ell)?, 2, t)?;
        let report = classify_cover_family(&fam, t)?;
        if report.classification != expected {
            bad = Some(format!(
                "frankl(n={n},k={k},t={t},ell={ell}): got {:?}, expected {expected:?}",
                report.classification
            ));
            break;
        }
        reports.push((fam, t, report));
    }
    checks.push(check(
        "saturated Frankl families classify as FullSimplex (ell = t+2) / Case3(ell)",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} cases match", frankl_cases.len())),
    ));

    let mut bad = None;
    for &(n, k, t) in &[(12u32, 4u32, 1u32), (12, 4, 2), (12, 5, 2)] {
        let fam = saturate(&case2_witness(n, k, t)?, 2, t)?;
        let report = classify_cover_family(&fam, t)?;
        if report.classification != Classification::Case2 {
            bad = Some(format!("witness(n={n},k={k},t={t}): got {:?}", report.classification));
            break;
        }
        reports.push((fam, t, report));
    }
    checks.push(check(
        "two-cover witness families classify as Case2",
        bad.is_none(),
        bad.unwrap_or_else(|| "3 parameter sets match".into()),
    ));

    let mut bad = None;
    for &(n, k, t) in &[(8u32, 4u32, 2u32), (12, 4, 2), (12, 5, 3)] {
        let fam = build_gprime(n, k, 2, t)?;
        let report = classify_cover_family(&fam, t)?;
        if report.classification != Classification::FullSimplex {
            bad = Some(format!("gprime(n={n},k={k},t={t}): got {:?}", report.classification));
            break;
        }
        reports.push((fam, t, report));
    }
    checks.push(check(
        "G' at r = 2 classifies as the full simplex",
        bad.is_none(),
        bad.unwrap_or_else(|| "3 parameter sets match".into()),
    ));

    // moreover clause: members avoiding the t-core meet it in exactly t-1
    // elements; and the minimum covers pairwise t-intersect.
    let mut bad = None;
    for (fam, t, report) in &reports {
        for (i, a) in report.min_covers.iter().enumerate() {
            for b in &report.min_covers[i + 1..] {
                if a.intersect(*b).len() < *t {
                    bad = Some(format!("covers {a:?} and {b:?} intersect below t={t}"));
                }
            }
        }
        if matches!(
            report.classification,
            Classification::Case1 | Classification::Case2 | Classification::Case3(_)
        ) {
            for m in fam.members() {
                if !report.core.is_subset_of(*m) && m.intersect(report.core).len() != t - 1 {
                    bad = Some(format!(
                        "member {m:?} meets the core {:?} in {} != t-1 elements",
                        report.core,
                        m.intersect(report.core).len()
                    ));
                }
            }
        }
    }
    checks.push(check(
        "moreover clause: covers t-intersect; core-avoiding members meet it in t-1",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} classified families checked", reports.len())),
    ));

    Ok(SuiteResult { suite: "lemma23".into(), checks })
}

/// Size bounds for the three tau = t+1 cases against actual saturated
/// families at n = 81, k = 3.
pub fn suite_lemma24(_opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut checks = Vec::new();

    // Case 3 at (81, 3, 1): the saturated ell = 4 Frankl family against
    // (k+1) C(n-t-1, k-t-1) = 4 * 79
    let fam = saturate(&build_frankl(81, 3, 1, 4)?, 2, 1)?;
    let bound = size_bounds_l24(81, 3, 1, 3)?;
    let ok = BigRational::from_integer(fam.len().into()) <= bound;
    checks.push(check(
        "saturated Frankl (ell = 4) size respects the case 3 bound at (81, 3, 1)",
        ok,
        format!("{} <= {}", fam.len(), bound),
    ));

    // Case 2 at (81, 3, 1): the two-cover witness against (21/10) * 79
    let fam = saturate(&case2_witness(81, 3, 1)?, 2, 1)?;
    let bound = size_bounds_l24(81, 3, 1, 2)?;
    let ok = BigRational::from_integer(fam.len().into()) <= bound;
    checks.push(check(
        "saturated two-cover witness size respects the case 2 bound at (81, 3, 1)",
        ok,
        format!("{} <= {}", fam.len(), bound),
    ));

    Ok(SuiteResult { suite: "lemma24".into(), checks })
}

/// Pairwise intersections of random saturated families stay at or above
/// (r-2)(s-t) + t where s is the covering number.
pub fn suite_lemma41(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(41));
    let mut bad = None;
    let mut bad_family = None;
    let mut trivial = 0u64;
    for i in 0..opts.floor_samples {
        let r = 3 + (i % 2) as u32;
        let t = rng.gen_range(1..=2u32);
        let k = rng.gen_range((r + t)..=(r + t + 2));
        let n = rng.gen_range((k + 2)..=14.max(k + 2));
        let params = Params::new(n, k, r, t)?;
        let fam = random_maximal_family(params, &mut rng);
        let s = covering_number(&fam, t)?;
        if s == t && fam.common_core().len() >= t {
            // a common t-core already gives every pair at least t = floor
            trivial += 1;
            continue;
        }
        let floor = intersection_floor(r, s, t)?;
        let ms = fam.members();
        'outer: for (a, x) in ms.iter().enumerate() {
            for y in &ms[a + 1..] {
                if x.intersect(*y).len() < floor {
                    bad = Some(format!(
                        "(n={n},k={k},r={r},t={t},s={s}): pair meets in {} < {floor}",
                        x.intersect(*y).len()
                    ));
                    break 'outer;
                }
            }
        }
        if bad.is_some() {
            bad_family = Some(crate::fileio::FamilyFile::from_family(&fam, Some(r), Some(t)));
            break;
        }
    }
    let mut c = check(
        "random saturated families meet the (r-2)(s-t)+t pairwise floor",
        bad.is_none(),
        bad.unwrap_or_else(|| {
            format!("{} families checked ({trivial} via common-core shortcut)", opts.floor_samples)
        }),
    );
    c.counterexample = bad_family;
    Ok(SuiteResult { suite: "lemma41".into(), checks: vec![c] })
}

/// The two-block construction is triangle-free.
pub fn suite_lemma47(_opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut bad = None;
    for &(n, k, r, t) in &[(10u32, 7u32, 2u32, 2u32), (12, 9, 3, 2), (12, 8, 2, 3)] {
        let fam = build_two_block(n, k, r, t)?;
        let count = count_triangles(&fam, r, t, false)?;
        if !count.is_zero() {
            bad = Some(format!("(n={n},k={k},r={r},t={t}): counted {count} triangles"));
            break;
        }
    }
    let c = check(
        "two-block families have zero triangles",
        bad.is_none(),
        bad.unwrap_or_else(|| "3 parameter sets pass".into()),
    );
    Ok(SuiteResult { suite: "lemma47".into(), checks: vec![c] })
}

/// Cover-hypergraph verdicts: G' is a single clique of order r+t, the
/// two-block family splits into two such cliques, and the trivial family
/// sits outside the tau = t+1 regime.
pub fn suite_hypergraph(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut checks = Vec::new();

    let g = grid(opts.max_n, opts.max_k, 2);
    let mut bad = None;
    for &(n, k, r, t) in &g {
        let fam = build_gprime(n, k, r, t)?;
        let hg = build_cover_hypergraph(&fam, t)?;
        let report = decompose(&hg, r);
        if report.verdict != Verdict::SingleCliqueOrderRPlusT
            || report.components.len() != 1
            || report.components[0].vertices.len() != r + t
        {
            bad = Some(format!("(n={n},k={k},r={r},t={t}): verdict {:?}", report.verdict));
            break;
        }
        if let ConsequenceOutcome::Failed(msg) = verdict_consequence(&report, &fam, r, t)? {
            bad = Some(format!("(n={n},k={k},r={r},t={t}): consequence failed: {msg}"));
            break;
        }
    }
    checks.push(check(
        "G' decomposes into one clique of order r+t on grid",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} grid points agree", g.len())),
    ));

    let mut bad = None;
    for &(n, k, r, t) in &[(10u32, 7u32, 2u32, 2u32), (12, 9, 3, 2), (12, 8, 2, 3)] {
        let fam = build_two_block(n, k, r, t)?;
        let report = decompose(&build_cover_hypergraph(&fam, t)?, r);
        if report.verdict != Verdict::MultiClique || report.components.len() != 2 {
            bad = Some(format!(
                "(n={n},k={k},r={r},t={t}): verdict {:?}, {} components",
                report.verdict,
                report.components.len()
            ));
            break;
        }
        match verdict_consequence(&report, &fam, r, t)? {
            ConsequenceOutcome::Passed(_) => {}
            other => {
                bad = Some(format!("(n={n},k={k},r={r},t={t}): consequence {other:?}"));
                break;
            }
        }
    }
    checks.push(check(
        "two-block families decompose into two cliques of order r+t, zero triangles",
        bad.is_none(),
        bad.unwrap_or_else(|| "3 parameter sets agree".into()),
    ));

    let fam = build_trivial(8, 4, 2)?;
    let hg = build_cover_hypergraph(&fam, 2)?;
    let report = decompose(&hg, 2);
    let outcome = verdict_consequence(&report, &fam, 2, 2)?;
    let ok = hg.outside_regime
        && report.verdict == Verdict::Undefined
        && matches!(outcome, ConsequenceOutcome::NoClaim(_));
    checks.push(check(
        "trivial family reports outside-regime with an undefined verdict",
        ok,
        format!("tau={}, verdict {:?}", hg.tau, report.verdict),
    ));

    Ok(SuiteResult { suite: "hypergraph".into(), checks })
}

pub const SUITES: &[&str] = &[
    "oracle",
    "lemma21",
    "lemma23",
    "lemma24",
    "lemma41",
    "lemma47",
    "hypergraph",
];

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteResult>> {
    match name {
        "oracle" => Ok(vec![suite_oracle(opts)?]),
        "lemma21" => Ok(vec![suite_lemma21(opts)?]),
        "lemma23" => Ok(vec![suite_lemma23(opts)?]),
        "lemma24" => Ok(vec![suite_lemma24(opts)?]),
        "lemma41" => Ok(vec![suite_lemma41(opts)?]),
        "lemma47" => Ok(vec![suite_lemma47(opts)?]),
        "hypergraph" => Ok(vec![suite_hypergraph(opts)?]),
        "all" => SUITES.iter().map(|s| Ok(run_suite(s, opts)?.remove(0))).collect(),
        other => Err(Error::Param(format!("unknown suite '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_g;

    #[test]
    fn naive_count_matches_formula() {
        let fam = build_g(6, 4, 2, 2).unwrap();
        assert_eq!(naive::count_triangles(&fam, 2, 2), exact_count_g(6, 4, 2, 2).unwrap());
    }

    #[test]
    fn naive_cover_on_triangle() {
        // three 2-sets pairwise meeting in the hub element
        let fam = Family::new(
            4,
            2,
            vec![
                KSet::from_elems(&[1, 2], 4).unwrap(),
                KSet::from_elems(&[1, 3], 4).unwrap(),
                KSet::from_elems(&[1, 4], 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(naive::covering_number(&fam, 1), Some(1));
        assert_eq!(naive::min_covers(&fam, 1), vec![KSet::from_elems(&[1], 4).unwrap()]);
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions { max_n: 7, max_k: 5, seed: 1, floor_samples: 5, cover_samples: 10 };
        for name in ["oracle", "lemma47"] {
            for suite in run_suite(name, &opts).unwrap() {
                assert!(suite.passed(), "{}: {:?}", suite.suite, suite.checks);
            }
        }
    }
}
