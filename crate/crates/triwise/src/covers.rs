//! t-cover enumeration, covering number, and the classification of the
//! minimum-cover family for maximal 2-wise t-intersecting families.

use std::collections::HashSet;

use serde::Serialize;

use crate::family::{is_maximal, Family};
use crate::kset::{k_subsets, KSet};
use crate::{Error, Result};

/// True iff |T ∩ F| >= t for every member F.
pub fn is_t_cover(cover: KSet, fam: &Family, t: u32) -> bool {
    fam.members()
        .iter()
        .all(|m| m.intersect(cover).len() >= t)
}

/// Branch-and-bound search for covers of size <= budget.
///
/// At each node some member is still under-covered (otherwise the partial
/// set is already a cover), and any completion must take an element from
/// that member, so branching on its missing elements is complete. Elements
/// outside every member never help, hence all minimum covers are reachable.
fn cover_search(
    members: &[KSet],
    t: u32,
    budget: u32,
    partial: KSet,
    out: &mut Option<&mut HashSet<u128>>,
    found: &mut bool,
) {
    // pick the under-covered member with the fewest branch elements
    let mut worst: Option<(u32, KSet)> = None;
    for m in members {
        let have = m.intersect(partial).len();
        if have < t {
            let deficit = t - have;
            let branches = m.len() - have;
            if branches < deficit {
                return; // cannot be repaired at all
            }
            match worst {
                Some((b, _)) if branches >= b => {}
                _ => worst = Some((branches, *m)),
            }
        }
    }
    let Some((_, member)) = worst else {
        // partial is a cover
        *found = true;
        if let Some(set) = out.as_deref_mut() {
            if partial.len() == budget {
                set.insert(partial.bits());
            }
        }
        return;
    };
    if partial.len() >= budget {
        return;
    }
    let deficit = t - member.intersect(partial).len();
    if partial.len() + deficit > budget {
        return;
    }
    let missing = KSet::from_bits(member.bits() & !partial.bits());
    for e in missing.elems() {
        let next = KSet::from_bits(partial.bits() | (1u128 << (e - 1)));
        cover_search(members, t, budget, next, out, found);
        if out.is_none() && *found {
            return;
        }
    }
}

fn exists_cover(fam: &Family, t: u32, size: u32) -> bool {
    let mut found = false;
    let mut none: Option<&mut HashSet<u128>> = None;
    cover_search(fam.members(), t, size, KSet::from_bits(0), &mut none, &mut found);
    found
}

/// The covering number: smallest |T| with |T ∩ F| >= t for every member.
pub fn covering_number(fam: &Family, t: u32) -> Result<u32> {
    if fam.is_empty() {
        return Err(Error::Param("covering number undefined for the empty family".into()));
    }
    if fam.k() < t {
        return Err(Error::Param(format!(
            "no t-cover exists: members have k={} < t={t} elements",
            fam.k()
        )));
    }
    for s in t..=fam.n() {
        if exists_cover(fam, t, s) {
            return Ok(s);
        }
    }
    unreachable!("the full ground set is always a cover when k >= t")
}

/// All covers of size exactly covering_number(fam, t), canonically ordered.
pub fn min_covers(fam: &Family, t: u32) -> Result<Vec<KSet>> {
    let tau = covering_number(fam, t)?;
    let mut set = HashSet::new();
    let mut found = false;
    {
        let mut sink = Some(&mut set);
        cover_search(fam.members(), t, tau, KSet::from_bits(0), &mut sink, &mut found);
    }
    let mut out: Vec<KSet> = set.into_iter().map(KSet::from_bits).collect();
    out.sort();
    Ok(out)
}

/// All t-covers up to a size cap, by exhaustive subset scan. Exploratory
/// (the lemmas only ever need minimum-size covers); gated for feasibility.
pub fn all_covers_up_to(fam: &Family, t: u32, cap: u32) -> Result<Vec<KSet>> {
    if fam.is_empty() {
        return Err(Error::Param("covers undefined for the empty family".into()));
    }
    if fam.n() > 24 {
        return Err(Error::Infeasible(
            "exhaustive cover scan gated to n <= 24".into(),
        ));
    }
    let mut out = Vec::new();
    for s in t..=cap.min(fam.n()) {
        for cand in k_subsets(fam.n(), s) {
            if is_t_cover(cand, fam, t) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// The Lemma 2.3 shape of the minimum-cover family.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Classification {
    /// tau = t: some t-set lies in every member.
    Trivial,
    /// The covers are all (t+1)-subsets of a (t+2)-set; F is G'_{2,t}
    /// up to relabeling.
    FullSimplex,
    /// A unique minimum cover.
    Case1,
    /// Two covers sharing a common t-core (ell = t+2).
    Case2,
    /// ell - t covers sharing a common t-core, t+3 <= ell <= k+1.
    Case3(u32),
    /// tau >= t+2: outside the classification's regime.
    Unclassified,
}

/// Covering number, minimum covers, and their classification.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub tau: u32,
    pub min_covers: Vec<KSet>,
    pub classification: Classification,
    /// Common core of the minimum covers (the relabeling witness for the
    /// Case1/2/3 patterns).
    pub core: KSet,
}

/// Classifies the minimum-cover family of a maximal 2-wise t-intersecting
/// family. In the tau = t+1 regime exactly one of the four patterns must
/// match; anything else is reported as a hard inconsistency.
pub fn classify_cover_family(fam: &Family, t: u32) -> Result<CoverReport> {
    if !is_maximal(fam, 2, t)? {
        return Err(Error::Precondition(
            "cover classification requires a maximal family".into(),
        ));
    }
    let tau = covering_number(fam, t)?;
    let covers = min_covers(fam, t)?;
    let core = covers
        .iter()
        .fold(KSet::interval(1, fam.n()), |acc, c| acc.intersect(*c));

    if tau == t {
        return Ok(CoverReport { tau, min_covers: covers, classification: Classification::Trivial, core });
    }
    if tau >= t + 2 {
        return Ok(CoverReport { tau, min_covers: covers, classification: Classification::Unclassified, core });
    }

    // tau = t + 1
    let cover_family = Family::new(fam.n(), t + 1, covers.clone())?;
    let tau_c = covering_number(&cover_family, t)?;
    let classification = if tau_c == t + 1 {
        let union = cover_family.support();
        if union.len() == t + 2 && covers.len() == (t + 2) as usize {
            Classification::FullSimplex
        } else {
            return Err(Error::Inconsistency(format!(
                "tau_t(C) = t+1 but C is not the full simplex: {} covers on support of {}",
                covers.len(),
                union.len()
            )));
        }
    } else if covers.len() == 1 {
        Classification::Case1
    } else {
        // each cover must be core + one extra element
        if core.len() != t {
            return Err(Error::Inconsistency(format!(
                "tau_t(C) = t but the cover core has {} elements, expected {t}",
                core.len()
            )));
        }
        let ell = t + covers.len() as u32;
        if ell == t + 2 {
            Classification::Case2
        } else if ell >= t + 3 && ell <= fam.k() + 1 {
            Classification::Case3(ell)
        } else {
            return Err(Error::Inconsistency(format!(
                "cover star has ell = {ell}, outside [t+3, k+1] = [{}, {}]",
                t + 3,
                fam.k() + 1
            )));
        }
    };
    Ok(CoverReport { tau, min_covers: covers, classification, core })
}
