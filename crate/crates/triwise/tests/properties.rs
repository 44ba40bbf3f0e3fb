//! Property tests: relabeling invariance, monotonicity, saturation, and
//! round-trips, each cross-checked against naive oracles where one exists.

use proptest::prelude::*;

use triwise::covers::{covering_number, min_covers};
use triwise::family::{
    count_triangles, is_maximal, is_r_wise_t_intersecting, is_trivial, saturate, Family,
};
use triwise::fileio::FamilyFile;
use triwise::kset::{k_subsets, KSet};
use triwise::verify::naive;

/// A random family plus parameters: n in 4..=9, k in 2..=min(n,5),
/// 1..=8 distinct members, t in 1..=k, r in 2..=3.
fn family_strategy() -> impl Strategy<Value = (Family, u32, u32)> {
    (4u32..=9, 2u32..=5, 2u32..=3, proptest::collection::vec(any::<u64>(), 1..=8), 1u32..=5)
        .prop_map(|(n, k_raw, r, picks, t_raw)| {
            let k = k_raw.min(n);
            let all: Vec<KSet> = k_subsets(n, k).collect();
            let mut members: Vec<KSet> = Vec::new();
            for p in picks {
                let s = all[(p % all.len() as u64) as usize];
                if !members.contains(&s) {
                    members.push(s);
                }
            }
            let t = 1 + t_raw % k;
            (Family::new(n, k, members).unwrap(), r, t)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_everything((fam, r, t) in family_strategy(), seed in any::<u64>()) {
        let perm = {
            // deterministic permutation derived from the seed
            let mut p: Vec<u32> = (1..=fam.n()).collect();
            let mut state = seed;
            for i in (1..p.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                p.swap(i, j);
            }
            p
        };
        let relabeled = fam.relabel(&perm).unwrap();
        prop_assert_eq!(
            is_r_wise_t_intersecting(&fam, r, t),
            is_r_wise_t_intersecting(&relabeled, r, t)
        );
        prop_assert_eq!(is_trivial(&fam, t), is_trivial(&relabeled, t));
        prop_assert_eq!(
            count_triangles(&fam, r, t, true).unwrap(),
            count_triangles(&relabeled, r, t, true).unwrap()
        );
        prop_assert_eq!(covering_number(&fam, t).unwrap(), covering_number(&relabeled, t).unwrap());
        if is_r_wise_t_intersecting(&fam, r, t) {
            prop_assert_eq!(is_maximal(&fam, r, t).unwrap(), is_maximal(&relabeled, r, t).unwrap());
        }
        prop_assert!(triwise::search::is_isomorphic(&fam, &relabeled));
    }

    #[test]
    fn checker_matches_naive((fam, r, t) in family_strategy()) {
        prop_assert_eq!(
            is_r_wise_t_intersecting(&fam, r, t),
            naive::is_r_wise_t_intersecting(&fam, r, t)
        );
    }

    #[test]
    fn forced_count_matches_naive((fam, r, t) in family_strategy()) {
        prop_assert_eq!(
            count_triangles(&fam, r, t, true).unwrap(),
            naive::count_triangles(&fam, r, t)
        );
    }

    #[test]
    fn covers_match_naive((fam, _r, t) in family_strategy()) {
        prop_assert_eq!(covering_number(&fam, t).unwrap(), naive::covering_number(&fam, t).unwrap());
        let mut fast = min_covers(&fam, t).unwrap();
        let mut slow = naive::min_covers(&fam, t);
        fast.sort_by_key(|s| s.bits());
        slow.sort_by_key(|s| s.bits());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn count_is_monotone_under_subfamilies((fam, r, t) in family_strategy()) {
        // dropping the last member can only lose triangles
        if fam.len() > 1 {
            let sub = Family::new(
                fam.n(),
                fam.k(),
                fam.members()[..fam.len() - 1].to_vec(),
            ).unwrap();
            prop_assert!(
                count_triangles(&sub, r, t, true).unwrap()
                    <= count_triangles(&fam, r, t, true).unwrap()
            );
        }
    }

    #[test]
    fn saturation_superset_and_maximal((fam, r, t) in family_strategy()) {
        if is_r_wise_t_intersecting(&fam, r, t) {
            let sat = saturate(&fam, r, t).unwrap();
            for m in fam.members() {
                prop_assert!(sat.contains(m));
            }
            prop_assert!(is_r_wise_t_intersecting(&sat, r, t));
            prop_assert!(is_maximal(&sat, r, t).unwrap());
            prop_assert!(naive::is_maximal(&sat, r, t));
        }
    }

    #[test]
    fn file_round_trip((fam, r, t) in family_strategy()) {
        let file = FamilyFile::from_family(&fam, Some(r), Some(t));
        let json = file.to_json().unwrap();
        let back = FamilyFile::from_json(&json).unwrap().to_family().unwrap();
        prop_assert_eq!(fam.members(), back.members());
        prop_assert_eq!(fam.n(), back.n());
        // serialization is canonical: a second pass is byte-identical
        let again = FamilyFile::from_family(&back, Some(r), Some(t)).to_json().unwrap();
        prop_assert_eq!(json, again);
    }
}
