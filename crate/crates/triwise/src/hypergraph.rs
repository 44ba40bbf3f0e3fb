//! The auxiliary (t+1)-uniform hypergraph of minimum t-covers, its
//! components and clique structure, and the structural verdicts they
//! imply for the originating family.

use num_traits::Zero;
use serde::Serialize;

use crate::covers::{covering_number, min_covers};
use crate::family::{count_triangles, Family};
use crate::formulas::{threshold_n0, ThresholdLemma};
use crate::kset::KSet;
use crate::{Error, Result};

/// Edges are the (t+1)-sized minimum t-covers; vertices their union.
#[derive(Clone, Debug)]
pub struct CoverHypergraph {
    pub t: u32,
    pub tau: u32,
    pub edges: Vec<KSet>,
    pub vertices: KSet,
    /// Set when tau != t+1: the intended regime does not hold and the edge
    /// set is empty.
    pub outside_regime: bool,
}

pub fn build_cover_hypergraph(fam: &Family, t: u32) -> Result<CoverHypergraph> {
    if fam.is_empty() {
        return Err(Error::Param("cover hypergraph undefined for the empty family".into()));
    }
    let tau = covering_number(fam, t)?;
    if tau != t + 1 {
        return Ok(CoverHypergraph {
            t,
            tau,
            edges: Vec::new(),
            vertices: KSet::from_bits(0),
            outside_regime: true,
        });
    }
    let edges = min_covers(fam, t)?;
    let vertices = edges
        .iter()
        .fold(KSet::from_bits(0), |acc, e| acc.union(*e));
    Ok(CoverHypergraph { t, tau, edges, vertices, outside_regime: false })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    /// One clique of order exactly r+t: F is sandwiched between G and G'
    /// after relabeling.
    SingleCliqueOrderRPlusT,
    /// Some component is not a clique.
    NotClique,
    /// All cliques, some of order above r+t.
    TooLarge,
    /// All cliques, some of order below r+t.
    TooSmall,
    /// Two or more cliques of order r+t: zero triangles.
    MultiClique,
    /// Empty edge set (outside the tau = t+1 regime).
    Undefined,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: KSet,
    pub edges: Vec<KSet>,
    pub is_clique: bool,
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub components: Vec<Component>,
    pub verdict: Verdict,
}

fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Connected components under shared-vertex adjacency of edges, clique
/// flags, and the structural verdict at parameters (r, t).
pub fn decompose(hg: &CoverHypergraph, r: u32) -> ComponentReport {
    let t = hg.t;
    let n_edges = hg.edges.len();
    // union-find over edges
    let mut parent: Vec<usize> = (0..n_edges).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n_edges {
        for j in (i + 1)..n_edges {
            if !hg.edges[i].intersect(hg.edges[j]).is_empty() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<Vec<KSet>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..n_edges {
        let root = find(&mut parent, i);
        match roots.iter().position(|&x| x == root) {
            Some(g) => groups[g].push(hg.edges[i]),
            None => {
                roots.push(root);
                groups.push(vec![hg.edges[i]]);
            }
        }
    }
    let mut components: Vec<Component> = groups
        .into_iter()
        .map(|edges| {
            let vertices = edges
                .iter()
                .fold(KSet::from_bits(0), |acc, e| acc.union(*e));
            let expected = binom_u64(vertices.len() as u64, (t + 1) as u64);
            let is_clique = edges.len() as u64 == expected;
            Component { vertices, edges, is_clique }
        })
        .collect();
    components.sort_by_key(|c| c.vertices.bits());

    let verdict = if components.is_empty() {
        Verdict::Undefined
    } else if components.iter().any(|c| !c.is_clique) {
        Verdict::NotClique
    } else if components.iter().any(|c| c.vertices.len() > r + t) {
        Verdict::TooLarge
    } else if components.iter().any(|c| c.vertices.len() < r + t) {
        Verdict::TooSmall
    } else if components.len() >= 2 {
        Verdict::MultiClique
    } else {
        Verdict::SingleCliqueOrderRPlusT
    };
    ComponentReport { components, verdict }
}

/// Outcome of executing a verdict's testable consequence.
#[derive(Clone, Debug, Serialize)]
pub enum ConsequenceOutcome {
    Passed(String),
    Failed(String),
    /// The lemma's claim is gated on n >= c k^d and the gate does not hold.
    BelowThreshold(String),
    /// The verdict carries no checkable claim.
    NoClaim(String),
}

/// Maps a verdict to its testable consequence and executes it against the
/// originating family.
pub fn verdict_consequence(
    report: &ComponentReport,
    fam: &Family,
    r: u32,
    t: u32,
) -> Result<ConsequenceOutcome> {
    match report.verdict {
        Verdict::MultiClique => {
            let count = count_triangles(fam, r, t, false)?;
            if count.is_zero() {
                Ok(ConsequenceOutcome::Passed(
                    "two or more cliques of order r+t: triangle count is 0".into(),
                ))
            } else {
                Ok(ConsequenceOutcome::Failed(format!(
                    "expected 0 triangles, counted {count}"
                )))
            }
        }
        Verdict::SingleCliqueOrderRPlusT => {
            // sandwich claim: membership depends only on overlap with the
            // clique's vertex set, so no explicit permutation is needed
            let head = report.components[0].vertices;
            let mut all_at_least = true;
            for m in fam.members() {
                if m.intersect(head).len() < r + t - 1 {
                    all_at_least = false;
                    break;
                }
            }
            let mut contains_g = true;
            for cand in crate::kset::k_subsets(fam.n(), fam.k()) {
                if cand.intersect(head).len() == r + t - 1 && !fam.contains(&cand) {
                    contains_g = false;
                    break;
                }
            }
            if all_at_least && contains_g {
                Ok(ConsequenceOutcome::Passed(
                    "family is sandwiched between G and G' on the clique's vertex set".into(),
                ))
            } else {
                Ok(ConsequenceOutcome::Failed(format!(
                    "sandwich failed: members within G' = {all_at_least}, G contained = {contains_g}"
                )))
            }
        }
        Verdict::NotClique | Verdict::TooLarge | Verdict::TooSmall => {
            let lemma = match report.verdict {
                Verdict::NotClique => ThresholdLemma::L44,
                Verdict::TooLarge => ThresholdLemma::L45,
                _ => ThresholdLemma::L46,
            };
            let spec = threshold_n0(r, t, lemma)?;
            if !spec.meets(fam.n(), fam.k()) {
                return Ok(ConsequenceOutcome::BelowThreshold(format!(
                    "lemma {} claim N(F) < N(G) gated on n >= c k^d; gate fails at n={}, k={}",
                    lemma,
                    fam.n(),
                    fam.k()
                )));
            }
            let count = count_triangles(fam, r, t, false)?;
            let bound = crate::formulas::exact_count_g(fam.n(), fam.k(), r, t)?;
            if count < bound {
                Ok(ConsequenceOutcome::Passed(format!(
                    "N(F) = {count} < N(G) = {bound}"
                )))
            } else {
                Ok(ConsequenceOutcome::Failed(format!(
                    "N(F) = {count} >= N(G) = {bound} above threshold"
                )))
            }
        }
        Verdict::Undefined => Ok(ConsequenceOutcome::NoClaim(
            "empty edge set: outside the tau = t+1 regime".into(),
        )),
    }
}
