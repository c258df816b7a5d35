//! Compressibility by census sweep.
//!
//! `τ(ℋ)` is the least `k` such that every tournament on `k` vertices
//! receives a homomorphism from some member of `ℋ`. Levels are checked one at
//! a time starting from the least longest-path order `p` of the members,
//! since no member maps into `TT_(p-1)`. Checking each level on its own is
//! enough: every tournament on `k + 1` vertices contains one on `k` vertices,
//! so once every `k`-tournament receives a member, so does every larger one.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::census::{tournaments, CENSUS_CAP};
use crate::construct::transitive_tournament;
use crate::error::{Error, Result};
use crate::format::to_hex;
use crate::graph::{OrientedGraph, Tournament};
use crate::hom::{hom_exists, Homomorphism};
use crate::par;
use crate::random::{random_permutation, rng, DEFAULT_SEED};
use crate::structure::{longest_path_from, longest_path_order};

/// Sweep ceiling used when the caller does not pick one.
pub const DEFAULT_MAX_K: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TauStatus {
    /// `tau` is the exact value.
    Exact,
    /// Every level up to the cap has a counterexample; `tau` is the lower bound `cap + 1`.
    LowerBoundAtCap,
}

#[derive(Debug, Clone)]
pub struct CompressibilityResult {
    pub tau: usize,
    /// Least longest-path order among the members.
    pub p: usize,
    pub status: TauStatus,
    /// For each checked level below `tau`, a tournament receiving no member.
    pub witnesses: BTreeMap<usize, Tournament>,
    /// Number of tournaments on `tau` vertices checked to receive a member
    /// (zero unless exact).
    pub verified_at_tau: usize,
}

impl CompressibilityResult {
    pub fn is_exact(&self) -> bool {
        self.status == TauStatus::Exact
    }

    /// Witnesses in the `n:HEX` format, keyed by level.
    pub fn witness_hex(&self) -> BTreeMap<usize, String> {
        self.witnesses.iter().map(|(&k, t)| (k, to_hex(t))).collect()
    }
}

fn first_member_hom(members: &[OrientedGraph], t: &Tournament) -> Option<Homomorphism> {
    members.iter().find_map(|h| hom_exists(h, t))
}

fn validate(members: &[OrientedGraph], max_k: usize) -> Result<usize> {
    if members.is_empty() {
        return Err(Error::InvalidParameter("empty family".into()));
    }
    let mut p = usize::MAX;
    for h in members {
        p = p.min(longest_path_order(h)?);
    }
    if max_k > CENSUS_CAP {
        return Err(Error::CapExceeded {
            what: "tau sweep level",
            value: max_k as u64,
            cap: CENSUS_CAP as u64,
        });
    }
    if p > max_k {
        return Err(Error::CapExceeded {
            what: "tau sweep: longest path order above max_k",
            value: p as u64,
            cap: max_k as u64,
        });
    }
    Ok(p)
}

/// Compressibility of a family of acyclic graphs.
pub fn tau_family(members: &[OrientedGraph], max_k: usize) -> Result<CompressibilityResult> {
    let p = validate(members, max_k)?;
    let mut witnesses = BTreeMap::new();
    if p >= 2 {
        witnesses.insert(p - 1, transitive_tournament(p - 1)?);
    }
    for k in p.max(1)..=max_k {
        match level_counterexample(members, k)? {
            Some(t) => {
                witnesses.insert(k, t);
            }
            None => {
                let verified_at_tau = reverify_level(members, k, DEFAULT_SEED ^ k as u64)?;
                return Ok(CompressibilityResult {
                    tau: k,
                    p,
                    status: TauStatus::Exact,
                    witnesses,
                    verified_at_tau,
                });
            }
        }
    }
    Ok(CompressibilityResult {
        tau: max_k + 1,
        p,
        status: TauStatus::LowerBoundAtCap,
        witnesses,
        verified_at_tau: 0,
    })
}

/// First census tournament on `k` vertices that receives no member, checked
/// again on a relabelled copy before it is returned.
fn level_counterexample(members: &[OrientedGraph], k: usize) -> Result<Option<Tournament>> {
    let census = tournaments(k)?;
    let hit = par::find_first_index(census.len(), |i| first_member_hom(members, &census.tournament(i)).is_none());
    Ok(hit.map(|i| {
        let t = census.tournament(i);
        let shuffled = t
            .relabel(&random_permutation(k, &mut rng(DEFAULT_SEED ^ i as u64)))
            .expect("permutation");
        assert!(first_member_hom(members, &shuffled).is_none(), "witness failed re-verification");
        t
    }))
}

/// Second full pass over a level, with every tournament randomly relabelled.
/// Returns the number of tournaments checked.
fn reverify_level(members: &[OrientedGraph], k: usize, seed: u64) -> Result<usize> {
    let census = tournaments(k)?;
    let failures = par::find_first_index(census.len(), |i| {
        let perm = random_permutation(k, &mut rng(seed.wrapping_add(i as u64)));
        let t = census.tournament(i).relabel(&perm).expect("permutation");
        first_member_hom(members, &t).is_none()
    });
    match failures {
        None => Ok(census.len()),
        Some(i) => Err(Error::Precondition(format!(
            "search is inconsistent under relabelling at level {k}, member {i}"
        ))),
    }
}

/// Compressibility of a single acyclic graph.
pub fn tau(h: &OrientedGraph, max_k: usize) -> Result<CompressibilityResult> {
    tau_family(std::slice::from_ref(h), max_k)
}

/// `τ(TT_k)`.
pub fn tau_tt(k: usize, max_k: usize) -> Result<CompressibilityResult> {
    tau(&*transitive_tournament(k)?, max_k)
}

/// First census tournament on `k` vertices receiving no homomorphism from `h`.
pub fn tau_lower_witness(h: &OrientedGraph, k: usize) -> Result<Option<Tournament>> {
    level_counterexample(std::slice::from_ref(h), k)
}

/// Leveled graph receiving every graph with out-degree at most `k` and
/// longest path order at most `n`.
///
/// Level 1 is a single sink. Each vertex of level `i > 1` is a set of between
/// 1 and `k` vertices from earlier levels, at least one from level `i - 1`,
/// and has arcs to exactly those vertices.
#[derive(Debug, Clone)]
pub struct UniversalDk {
    pub graph: OrientedGraph,
    pub k: usize,
    pub level_sizes: Vec<usize>,
    /// Out-neighbourhood label of every vertex, sorted.
    pub labels: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl UniversalDk {
    /// Homomorphism sending `v` to the vertex labelled by the images of its
    /// out-neighbours, built sinks first.
    pub fn embed(&self, h: &OrientedGraph) -> Result<Homomorphism> {
        let lens = longest_path_from(h)?;
        if let Some(v) = (0..h.order()).find(|&v| h.out_degree(v) > self.k) {
            return Err(Error::Precondition(format!("vertex {v} has out-degree above {}", self.k)));
        }
        if lens.iter().any(|&l| l > self.level_sizes.len()) {
            return Err(Error::Precondition("longest path exceeds the number of levels".into()));
        }
        let mut order: Vec<usize> = (0..h.order()).collect();
        order.sort_by_key(|&v| lens[v]);
        let mut map = vec![0usize; h.order()];
        for v in order {
            let mut label: Vec<usize> = crate::graph::bits(h.out_mask(v)).map(|w| map[w]).collect();
            label.sort_unstable();
            label.dedup();
            map[v] = self.index[&label];
        }
        Homomorphism::certify(map, h, &self.graph)
    }
}

pub fn build_universal_dk(n: usize, k: usize) -> Result<UniversalDk> {
    if k == 0 && n > 1 {
        return Err(Error::InvalidParameter("out-degree bound 0 admits only one level".into()));
    }
    let mut labels: Vec<Vec<usize>> = Vec::new();
    let mut level_sizes = Vec::new();
    if n >= 1 {
        labels.push(Vec::new());
        level_sizes.push(1);
    }
    for level in 2..=n {
        let earlier = labels.len();
        let prev_start = earlier - level_sizes.last().unwrap();
        let mut fresh = Vec::new();
        for size in 1..=k.min(earlier) {
            for combo in combinations(earlier, size) {
                if combo.iter().any(|&x| x >= prev_start) {
                    fresh.push(combo);
                }
            }
        }
        if earlier + fresh.len() > crate::graph::MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "universal graph size (level reached)",
                value: level as u64,
                cap: crate::graph::MAX_VERTICES as u64,
            });
        }
        level_sizes.push(fresh.len());
        labels.extend(fresh);
    }
    let arcs = labels
        .iter()
        .enumerate()
        .flat_map(|(v, l)| l.iter().map(move |&w| (v, w)))
        .collect::<Vec<_>>();
    let graph = OrientedGraph::from_arcs(labels.len(), arcs)?;
    let index = labels.iter().enumerate().map(|(v, l)| (l.clone(), v)).collect();
    Ok(UniversalDk {
        graph,
        k,
        level_sizes,
        labels,
        index,
    })
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < size - cur.len() {
                break;
            }
            cur.push(x);
            rec(n, size, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, size, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::construct::*;
    use crate::random::random_dk;

    #[test]
    fn paths() {
        for k in 1..=5 {
            let r = tau(&directed_path(k).unwrap(), 6).unwrap();
            assert_eq!((r.tau, r.status), (k, TauStatus::Exact));
        }
        let r = tau(&directed_path(1).unwrap(), 3).unwrap();
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(tau(&directed_cycle(3).unwrap(), 5).unwrap_err(), Error::Cyclic);
        assert!(tau(&directed_path(6).unwrap(), 5).unwrap_err().is_cap());
        assert!(tau(&directed_path(2).unwrap(), 11).unwrap_err().is_cap());
        assert!(tau_family(&[], 5).is_err());
    }

    #[test]
    fn capped_sweep_reports_lower_bound() {
        let r = tau(&power_path(5, 2).unwrap(), 6).unwrap();
        assert_eq!((r.tau, r.status), (7, TauStatus::LowerBoundAtCap));
        assert_eq!(r.witnesses.keys().copied().collect::<Vec<_>>(), vec![4, 5, 6]);
    }

    #[test]
    fn transitive() {
        assert_eq!(tau_tt(2, 5).unwrap().tau, 2);
        let r = tau_tt(3, 5).unwrap();
        assert_eq!(r.tau, 4);
        assert!(are_isomorphic(&r.witnesses[&3], &directed_cycle(3).unwrap()).unwrap());
    }

    #[test]
    fn lower_witness() {
        let w = tau_lower_witness(&directed_path(4).unwrap(), 3).unwrap().unwrap();
        assert!(are_isomorphic(&w, &transitive_tournament(3).unwrap()).unwrap());
        assert!(tau_lower_witness(&directed_path(3).unwrap(), 3).unwrap().is_none());
    }

    #[test]
    fn universal_graphs() {
        let u = build_universal_dk(4, 2).unwrap();
        assert_eq!(u.level_sizes, vec![1, 1, 2, 7]);
        assert!(u.graph.max_out_degree() <= 2);
        assert_eq!(longest_path_order(&u.graph).unwrap(), 4);
        let mut r = rng(5);
        for _ in 0..50 {
            let h = random_dk(10, 2, 4, &mut r);
            u.embed(&h).unwrap();
        }
        let p = build_universal_dk(6, 1).unwrap();
        assert!(are_isomorphic(&p.graph, &directed_path(6).unwrap()).unwrap());
        assert!(build_universal_dk(5, 2).unwrap_err().is_cap());
    }
}
