//! Oriented Turán numbers at tiny orders and the constructions bounding them.
//!
//! `ex→(n, ℋ)` is the largest number of arcs in an oriented graph on `n`
//! vertices containing no copy of any member of `ℋ`. Blow-ups of a tournament
//! that receives no member are `ℋ`-free, which gives the lower bound
//! `(1 - 1/(τ-1)) * C(n, 2)` up to rounding.

use num_rational::Ratio;
use serde::Serialize;

use crate::census::{oriented_stream_len, tournaments, CENSUS_CAP};
use crate::clique::{omega_ro, OMEGA_CAP};
use crate::construct::{blow_up, transitive_tournament};
use crate::error::{Error, Result};
use crate::format::pairs;
use crate::graph::{bit, OrientedGraph, Tournament};
use crate::hom::{contains_copy, hom_exists};
use crate::par;
use crate::random::stream_rng;
use crate::structure::count_c3;
use crate::tau::{combinations, tau_family, TauStatus};

/// `(τ - 2) / (τ - 1) * C(n, 2)`, the leading term of `ex→(n, ℋ)`.
pub fn turan_density_term(tau: usize, n: usize) -> Result<Ratio<u64>> {
    if tau < 2 {
        return Err(Error::InvalidParameter(format!("density term needs tau >= 2, got {tau}")));
    }
    let pairs = (n * n.saturating_sub(1) / 2) as u64;
    Ok(Ratio::new((tau as u64 - 2) * pairs, tau as u64 - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub value: usize,
    /// Least stream index among the extremal graphs.
    pub witness: OrientedGraph,
    pub stream_index: u64,
}

fn stream_index(n: usize, g: &OrientedGraph) -> u64 {
    let mut index = 0u64;
    let mut place = 1u64;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_arc(i, j) {
                index += place;
            } else if g.has_arc(j, i) {
                index += 2 * place;
            }
            place *= 3;
        }
    }
    index
}

fn is_free(g: &OrientedGraph, forbidden: &[OrientedGraph]) -> bool {
    forbidden.iter().all(|h| contains_copy(g, h).is_none())
}

/// `ex→(n, forbidden)` by exhaustive search over labelled oriented graphs.
///
/// Arc counts are tried from `C(n, 2)` downwards; the first count with a
/// forbidden-free graph is the answer, and among those graphs the one with
/// the least index in [`crate::census::oriented_from_index`] order is the
/// witness.
pub fn exact_ex_oriented(n: usize, forbidden: &[OrientedGraph]) -> Result<ExtremalResult> {
    oriented_stream_len(n)?;
    let all_pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for m in (0..=all_pairs.len()).rev() {
        let supports = combinations(all_pairs.len(), m);
        let best = par::map(&supports, |support| {
            let mut best: Option<u64> = None;
            for orient in 0u64..1 << m {
                let mut rows = vec![0u64; n];
                for (b, &p) in support.iter().enumerate() {
                    let (i, j) = all_pairs[p];
                    if orient >> b & 1 == 0 {
                        rows[i] |= bit(j);
                    } else {
                        rows[j] |= bit(i);
                    }
                }
                let g = OrientedGraph::from_out_rows(rows).expect("valid by construction");
                let index = stream_index(n, &g);
                if best.map_or(true, |b| index < b) && is_free(&g, forbidden) {
                    best = Some(index);
                }
            }
            best
        });
        if let Some(index) = best.into_iter().flatten().min() {
            return Ok(ExtremalResult {
                n,
                value: m,
                witness: crate::census::oriented_from_index(n, index),
                stream_index: index,
            });
        }
    }
    Err(Error::Precondition(format!(
        "every oriented graph on {n} vertices contains a forbidden member"
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowupBound {
    pub n: usize,
    pub arcs: usize,
    /// Part sizes, one per vertex of `base`.
    pub parts: Vec<usize>,
    /// Tournament on `τ - 1` vertices receiving no member.
    pub base: Tournament,
    pub graph: OrientedGraph,
}

/// Balanced blow-up of a largest tournament receiving no member of `family`.
///
/// The blow-up maps onto its base, so it cannot contain a member either; the
/// base is checked to receive none before the count is returned.
pub fn blowup_lower_bound(n: usize, family: &[OrientedGraph], max_k: usize) -> Result<BlowupBound> {
    let res = tau_family(family, max_k)?;
    if res.status == TauStatus::LowerBoundAtCap {
        return Err(Error::CapExceeded {
            what: "tau sweep for blow-up base",
            value: res.tau as u64,
            cap: max_k as u64,
        });
    }
    if res.tau < 2 {
        return Err(Error::InvalidParameter("a member without arcs is in every large graph".into()));
    }
    let t = res.tau - 1;
    let base = match res.witnesses.get(&t) {
        Some(w) => w.clone(),
        None => transitive_tournament(t)?,
    };
    if family.iter().any(|h| hom_exists(h, &base).is_some()) {
        return Err(Error::Precondition("blow-up base receives a member".into()));
    }
    let parts: Vec<usize> = (0..t).map(|i| n / t + usize::from(i < n % t)).collect();
    // when n < t only the first n parts are nonempty
    let used = crate::graph::full_mask(t.min(n));
    let sizes: Vec<usize> = parts.iter().copied().filter(|&s| s > 0).collect();
    let graph = if sizes.is_empty() {
        OrientedGraph::empty(0)?
    } else {
        blow_up(&base.induced(used), &sizes)?
    };
    let arcs = pairs(n) - parts.iter().map(|&s| pairs(s)).sum::<usize>();
    debug_assert_eq!(graph.arc_count(), arcs);
    Ok(BlowupBound {
        n,
        arcs,
        parts,
        base,
        graph,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C3CountReport {
    pub n: usize,
    /// Census members on `2n` vertices scanned.
    pub scanned: usize,
    /// Members with no copy of `TT_n`.
    pub tt_free: usize,
    pub holds: bool,
    /// No `TT_n`-free member exists, so the bound holds trivially.
    pub vacuous: bool,
    pub counterexample: Option<Tournament>,
}

/// Whether every `TT_n`-free tournament on `2n` vertices has at least `n`
/// cyclic triangles.
pub fn verify_c3_count_bound(n: usize) -> Result<C3CountReport> {
    if 2 * n > CENSUS_CAP {
        return Err(Error::CapExceeded {
            what: "cyclic triangle bound census order",
            value: 2 * n as u64,
            cap: CENSUS_CAP as u64,
        });
    }
    let census = tournaments(2 * n)?;
    let tt = transitive_tournament(n)?;
    let free: Vec<Option<(bool, Tournament)>> = par::map_range(census.len(), |i| {
        let t = census.tournament(i);
        contains_copy(&t, &tt).is_none().then(|| (count_c3(&t) >= n, t))
    });
    let free: Vec<(bool, Tournament)> = free.into_iter().flatten().collect();
    let counterexample = free.iter().find(|(ok, _)| !ok).map(|(_, t)| t.clone());
    Ok(C3CountReport {
        n,
        scanned: census.len(),
        tt_free: free.len(),
        holds: counterexample.is_none(),
        vacuous: free.is_empty(),
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DkCliqueReport {
    pub k: usize,
    /// The bound under test, `k² + 1`.
    pub bound: usize,
    pub samples: usize,
    pub max_seen: usize,
    pub holds: bool,
    /// First sample whose relative clique number exceeds the bound.
    pub violation: Option<OrientedGraph>,
}

/// Samples acyclic graphs of out-degree at most `k` and compares their
/// relative oriented clique number with `k² + 1`.
///
/// The sampled graphs have between `k + 2` and `OMEGA_CAP.min(16)` vertices.
/// A violation is reported, not treated as an error: the first vertex of a
/// relative clique reaches every other one in at most two steps, which only
/// gives `k² + k + 1`, and [`find_dk_o_clique`] shows that value is attained
/// for small `k`.
pub fn check_dk_in_rk(k: usize, samples: usize, seed: u64) -> Result<DkCliqueReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("out-degree bound must be positive".into()));
    }
    let hi = OMEGA_CAP.min(16);
    let lo = (k + 2).min(hi);
    let graphs: Vec<OrientedGraph> = (0..samples as u64)
        .map(|i| {
            use rand::Rng;
            let mut r = stream_rng(seed, i);
            let n = r.gen_range(lo..=hi);
            let levels = r.gen_range(2..=n);
            crate::random::random_dk(n, k, levels, &mut r)
        })
        .collect();
    let omegas = par::map(&graphs, omega_ro);
    let bound = k * k + 1;
    let mut max_seen = 0;
    let mut violation = None;
    for (g, w) in graphs.iter().zip(omegas) {
        let w = w?;
        max_seen = max_seen.max(w);
        if w > bound && violation.is_none() {
            violation = Some(g.clone());
        }
    }
    Ok(DkCliqueReport {
        k,
        bound,
        samples,
        max_seen,
        holds: violation.is_none(),
        violation,
    })
}

/// An o-clique on `n` vertices with out-degree at most `k`, if one exists.
///
/// Vertices are numbered along a topological order, so a pair `i < j` can
/// only be joined by `i -> j` or `i -> x -> j` with `i < x < j`. Out-sets are
/// chosen from the last vertex backwards, and a vertex is accepted once it
/// reaches every later vertex in at most two steps.
pub fn find_dk_o_clique(k: usize, n: usize) -> Result<Option<OrientedGraph>> {
    if n > OMEGA_CAP {
        return Err(Error::CapExceeded {
            what: "o-clique search vertices",
            value: n as u64,
            cap: OMEGA_CAP as u64,
        });
    }
    fn go(i: usize, n: usize, k: usize, rows: &mut [u64]) -> bool {
        if i == 0 {
            return true;
        }
        let v = i - 1;
        let later = n - i;
        let need = crate::graph::full_mask(n) & !crate::graph::full_mask(i);
        for size in 0..=k.min(later) {
            for pick in combinations(later, size) {
                let out = pick.iter().fold(0u64, |m, &x| m | bit(i + x));
                let reach = crate::graph::bits(out).fold(out, |m, x| m | rows[x]);
                if reach & need != need {
                    continue;
                }
                rows[v] = out;
                if go(v, n, k, rows) {
                    return true;
                }
            }
        }
        rows[v] = 0;
        false
    }
    let mut rows = vec![0u64; n];
    if go(n, n, k, &mut rows) {
        Ok(Some(OrientedGraph::from_out_rows(rows)?))
    } else {
        Ok(None)
    }
}

/// The largest order of an o-clique with out-degree at most `k`, searching
/// orders up to `k² + k + 2`.
pub fn max_dk_o_clique(k: usize) -> Result<(usize, OrientedGraph)> {
    let mut best = (1, OrientedGraph::empty(1)?);
    for n in 2..=k * k + k + 2 {
        match find_dk_o_clique(k, n)? {
            Some(g) => best = (n, g),
            None => break,
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::is_o_clique;
    use crate::construct::{directed_cycle, directed_path, power_path};
    use crate::structure::is_acyclic;

    #[test]
    fn density_terms() {
        assert_eq!(turan_density_term(3, 4).unwrap(), Ratio::from_integer(3));
        assert_eq!(turan_density_term(2, 9).unwrap(), Ratio::from_integer(0));
        assert_eq!(turan_density_term(7, 14).unwrap(), Ratio::new(455, 6));
        assert!(turan_density_term(1, 4).is_err());
    }

    #[test]
    fn small_extremal_numbers() {
        let p3 = directed_path(3).unwrap();
        let r = exact_ex_oriented(3, &[p3.clone()]).unwrap();
        assert_eq!(r.value, 2);
        assert!(contains_copy(&r.witness, &p3).is_none());
        let c3 = directed_cycle(3).unwrap();
        let r = exact_ex_oriented(3, &[c3]).unwrap();
        assert_eq!(r.value, 3);
        assert!(is_acyclic(&r.witness));
        assert_eq!(r.witness.arc_count(), 3);
        let r = exact_ex_oriented(4, &[]).unwrap();
        assert_eq!((r.value, r.stream_index), (6, 364));
        assert!(exact_ex_oriented(3, &[OrientedGraph::empty(2).unwrap()]).is_err());
        assert!(exact_ex_oriented(7, &[p3]).unwrap_err().is_cap());
    }

    #[test]
    fn witness_is_first_in_stream_order() {
        let tt3: OrientedGraph = transitive_tournament(3).unwrap().into();
        let r = exact_ex_oriented(4, &[tt3.clone()]).unwrap();
        let first = crate::census::oriented_stream(4)
            .unwrap()
            .position(|g| g.arc_count() == r.value && contains_copy(&g, &tt3).is_none())
            .unwrap() as u64;
        assert_eq!(r.stream_index, first);
        assert_eq!(stream_index(4, &r.witness), first);
    }

    #[test]
    fn blowup_bounds() {
        let p3 = directed_path(3).unwrap();
        let b = blowup_lower_bound(6, &[p3.clone()], 6).unwrap();
        assert_eq!((b.arcs, b.parts.clone()), (9, vec![3, 3]));
        assert_eq!(b.graph.arc_count(), 9);
        assert!(contains_copy(&b.graph, &p3).is_none());
        let p2 = directed_path(2).unwrap();
        assert_eq!(blowup_lower_bound(5, &[p2], 4).unwrap().arcs, 0);
        let b = blowup_lower_bound(2, &[directed_path(4).unwrap()], 6).unwrap();
        assert_eq!(b.arcs, 1);
        assert!(blowup_lower_bound(4, &[OrientedGraph::empty(2).unwrap()], 4).is_err());
    }

    #[test]
    fn c3_count_bound_is_vacuous_at_small_orders() {
        for n in 1..=3 {
            let r = verify_c3_count_bound(n).unwrap();
            assert!(r.holds && r.vacuous, "{r:?}");
        }
        assert!(verify_c3_count_bound(6).unwrap_err().is_cap());
    }

    #[test]
    fn o_cliques_with_bounded_out_degree() {
        let (n1, g1) = max_dk_o_clique(1).unwrap();
        assert_eq!(n1, 3);
        assert!(is_o_clique(&g1) && g1.max_out_degree() <= 1);
        let (n2, g2) = max_dk_o_clique(2).unwrap();
        assert_eq!(n2, 7);
        assert!(is_o_clique(&g2) && is_acyclic(&g2) && g2.max_out_degree() <= 2);
        assert_eq!(omega_ro(&g2).unwrap(), 7);
    }

    #[test]
    fn dk_sampling_reports_what_it_sees() {
        let r = check_dk_in_rk(1, 30, 5).unwrap();
        assert!(r.max_seen >= 2 && r.max_seen <= 3);
        let r = check_dk_in_rk(2, 20, 5).unwrap();
        assert!(r.max_seen <= 7);
        assert_eq!(r.holds, r.violation.is_none());
        assert!(omega_ro(&power_path(6, 2).unwrap()).unwrap() <= 5);
    }
}
