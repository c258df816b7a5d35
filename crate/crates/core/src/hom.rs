//! Homomorphism and subgraph search between small oriented graphs.
//!
//! The search is a backtracking CSP over the source's vertices with bitmask
//! domains and forward checking. Vertices are visited in a fixed order:
//! topological for acyclic sources, otherwise greedily by connectivity to the
//! already-ordered vertices. Target vertices are tried in ascending order, so
//! the returned witness is deterministic. When the unassigned source vertices
//! split into several components, each component is solved on its own.

use serde::{Deserialize, Serialize};

use crate::domination::is_dominated;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, full_mask, OrientedGraph};
use crate::structure::topological_order;

/// An arc-preserving map from a source graph to a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Homomorphism {
    source_size: usize,
    target_size: usize,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Wraps `map` after certifying that it preserves every arc.
    pub fn certify(map: Vec<usize>, h: &OrientedGraph, t: &OrientedGraph) -> Result<Self> {
        if is_homomorphism(&map, h, t)? {
            Ok(Homomorphism {
                source_size: h.order(),
                target_size: t.order(),
                map,
            })
        } else {
            Err(Error::Precondition("map does not preserve every arc".into()))
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.map.iter().all(|&x| {
            let fresh = seen & bit(x) == 0;
            seen |= bit(x);
            fresh
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            source_size: self.source_size,
            target_size: other.target_size,
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }
}

/// Whether `map` sends every arc of `h` to an arc of `t`.
pub fn is_homomorphism(map: &[usize], h: &OrientedGraph, t: &OrientedGraph) -> Result<bool> {
    if map.len() != h.order() {
        return Err(Error::InvalidParameter(format!(
            "map has {} entries for a source on {} vertices",
            map.len(),
            h.order()
        )));
    }
    if let Some(&x) = map.iter().find(|&&x| x >= t.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: t.order(),
        });
    }
    Ok(h.arcs().all(|a| t.has_arc(map[a.source], map[a.target])))
}

struct Search<'a> {
    /// Source relabelled so that the visiting order is index order.
    h: OrientedGraph,
    t: &'a OrientedGraph,
    und: Vec<u64>,
    injective: bool,
}

type Domains = [u64; 64];

impl Search<'_> {
    fn component(&self, start: usize, within: u64) -> u64 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |m, v| m | self.und[v]) & within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    fn solve(&self, map: &mut [usize], doms: &Domains, unassigned: u64) -> bool {
        if unassigned == 0 {
            return true;
        }
        let v = unassigned.trailing_zeros() as usize;
        if !self.injective {
            let comp = self.component(v, unassigned);
            if comp != unassigned {
                return self.solve(map, doms, comp) && self.solve(map, doms, unassigned & !comp);
            }
        }
        let rest = unassigned & !bit(v);
        let succ = self.h.out_mask(v) & rest;
        let pred = self.h.in_mask(v) & rest;
        'values: for x in bits(doms[v]) {
            let mut d = *doms;
            for u in bits(succ) {
                d[u] &= self.t.out_mask(x);
                if d[u] == 0 {
                    continue 'values;
                }
            }
            for u in bits(pred) {
                d[u] &= self.t.in_mask(x);
                if d[u] == 0 {
                    continue 'values;
                }
            }
            if self.injective {
                for u in bits(rest) {
                    d[u] &= !bit(x);
                    if d[u] == 0 {
                        continue 'values;
                    }
                }
            }
            map[v] = x;
            if self.solve(map, &d, rest) {
                return true;
            }
        }
        false
    }
}

/// Visiting order: pinned vertices first, then topological (acyclic) or by
/// connectivity to the vertices ordered so far.
fn visit_order(h: &OrientedGraph, pinned: u64) -> Vec<usize> {
    let n = h.order();
    let mut order: Vec<usize> = bits(pinned).collect();
    if let Some(topo) = topological_order(h) {
        order.extend(topo.into_iter().filter(|&v| pinned & bit(v) == 0));
        return order;
    }
    let und: Vec<u64> = (0..n).map(|v| h.out_mask(v) | h.in_mask(v)).collect();
    let mut placed = pinned;
    while order.len() < n {
        let best = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (und[v] & placed).count_ones(),
                    und[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= bit(best);
        order.push(best);
    }
    order
}

fn run_search(
    h: &OrientedGraph,
    t: &OrientedGraph,
    pins: &[(usize, usize)],
    injective: bool,
) -> Result<Option<Vec<usize>>> {
    let (hn, tn) = (h.order(), t.order());
    let mut pinned = 0u64;
    for &(v, x) in pins {
        if v >= hn {
            return Err(Error::VertexOutOfRange { vertex: v, n: hn });
        }
        if x >= tn {
            return Err(Error::VertexOutOfRange { vertex: x, n: tn });
        }
        pinned |= bit(v);
    }
    if hn == 0 {
        return Ok(Some(Vec::new()));
    }
    if tn == 0 || (injective && hn > tn) {
        return Ok(None);
    }
    let order = visit_order(h, pinned);
    let mut rank = vec![0usize; hn];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let hr = h.relabel(&rank)?;
    let has_out = (0..tn).filter(|&x| t.out_mask(x) != 0).fold(0u64, |m, x| m | bit(x));
    let has_in = (0..tn).filter(|&x| t.in_mask(x) != 0).fold(0u64, |m, x| m | bit(x));
    let mut doms: Domains = [0; 64];
    for (v, d) in doms.iter_mut().enumerate().take(hn) {
        *d = full_mask(tn);
        if hr.out_mask(v) != 0 {
            *d &= has_out;
        }
        if hr.in_mask(v) != 0 {
            *d &= has_in;
        }
    }
    for &(v, x) in pins {
        doms[rank[v]] &= bit(x);
    }
    if doms[..hn].iter().any(|&d| d == 0) {
        return Ok(None);
    }
    let search = Search {
        und: (0..hn).map(|v| hr.out_mask(v) | hr.in_mask(v)).collect(),
        h: hr,
        t,
        injective,
    };
    let mut map_r = vec![0usize; hn];
    if !search.solve(&mut map_r, &doms, full_mask(hn)) {
        return Ok(None);
    }
    Ok(Some((0..hn).map(|v| map_r[rank[v]]).collect()))
}

/// A homomorphism `h -> t`, or `None` after an exhaustive search.
pub fn hom_exists(h: &OrientedGraph, t: &OrientedGraph) -> Option<Homomorphism> {
    hom_exists_pinned(h, t, &[]).expect("no pins to validate")
}

/// Like [`hom_exists`] with some source vertices forced onto given targets.
pub fn hom_exists_pinned(
    h: &OrientedGraph,
    t: &OrientedGraph,
    pins: &[(usize, usize)],
) -> Result<Option<Homomorphism>> {
    Ok(run_search(h, t, pins, false)?.map(|map| {
        Homomorphism::certify(map, h, t).expect("search returns arc-preserving maps")
    }))
}

/// An injective homomorphism `pattern -> g`, i.e. a (not necessarily
/// induced) copy of `pattern` inside `g`.
pub fn contains_copy(g: &OrientedGraph, pattern: &OrientedGraph) -> Option<Homomorphism> {
    run_search(pattern, g, &[], true)
        .expect("no pins to validate")
        .map(|map| {
            let hom = Homomorphism::certify(map, pattern, g).expect("arc-preserving");
            debug_assert!(hom.is_injective());
            hom
        })
}

/// Upper bound on `|T|^|H|` accepted by [`count_homs`].
pub const COUNT_GUARD: u64 = 100_000_000;

/// Exact number of homomorphisms by enumerating every vertex map.
pub fn count_homs(h: &OrientedGraph, t: &OrientedGraph) -> Result<u64> {
    let (hn, tn) = (h.order(), t.order());
    let total = (tn as u64)
        .checked_pow(hn as u32)
        .filter(|&x| x <= COUNT_GUARD)
        .ok_or(Error::CapExceeded {
            what: "count_homs |T|^|H|",
            value: (tn as f64).powi(hn as i32).min(u64::MAX as f64) as u64,
            cap: COUNT_GUARD,
        })?;
    if total == 0 {
        return Ok(0);
    }
    let arcs: Vec<_> = h.arcs().collect();
    let mut map = vec![0usize; hn];
    let mut count = 0u64;
    loop {
        if arcs.iter().all(|a| t.has_arc(map[a.source], map[a.target])) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == hn {
                return Ok(count);
            }
            map[i] += 1;
            if map[i] < tn {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Embeds an acyclic `h` with out-degree at most `k` into a tournament in
/// which every `k`-subset is dominated.
///
/// Vertices are placed sinks-first; each vertex goes to the least vertex
/// dominating the images of its out-neighbours.
pub fn embed_via_domination(
    h: &OrientedGraph,
    t: &OrientedGraph,
    k: usize,
) -> Result<Homomorphism> {
    let order = topological_order(h).ok_or(Error::Cyclic)?;
    if let Some(v) = (0..h.order()).find(|&v| h.out_degree(v) > k) {
        return Err(Error::Precondition(format!(
            "vertex {v} has out-degree {} > {k}",
            h.out_degree(v)
        )));
    }
    if t.order() == 0 && h.order() > 0 {
        return Err(Error::Precondition("empty target".into()));
    }
    let mut map = vec![0usize; h.order()];
    for &v in order.iter().rev() {
        let images = bits(h.out_mask(v)).fold(0u64, |m, w| m | bit(map[w]));
        map[v] = is_dominated(t, images).ok_or_else(|| Error::Undominated(bits(images).collect()))?;
    }
    Homomorphism::certify(map, h, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::random::{random_dk, random_oriented, random_tournament, rng};
    use proptest::prelude::*;

    #[test]
    fn identity_and_constant_maps() {
        let g = power_path(6, 2).unwrap();
        assert!(is_homomorphism(&[0, 1, 2, 3, 4, 5], &g, &g).unwrap());
        let p2 = directed_path(2).unwrap();
        assert!(!is_homomorphism(&[0, 0], &p2, &p2).unwrap());
        assert!(is_homomorphism(&[0], &p2, &p2).is_err());
        assert!(is_homomorphism(&[0, 2], &p2, &p2).is_err());
    }

    #[test]
    fn paths_into_small_tournaments() {
        let tt3 = transitive_tournament(3).unwrap();
        assert!(hom_exists(&directed_path(4).unwrap(), &tt3).is_none());
        assert!(hom_exists(&directed_path(3).unwrap(), &tt3).is_some());
        let c3 = directed_cycle(3).unwrap();
        let hom = hom_exists(&directed_path(9).unwrap(), &c3).unwrap();
        assert_eq!(hom.map(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn power_path_avoids_tilde_t7() {
        assert!(hom_exists(&power_path(7, 3).unwrap(), &tilde_t7()).is_none());
        assert!(hom_exists(&power_path(6, 3).unwrap(), &tilde_t7()).is_some());
    }

    #[test]
    fn copies() {
        let c3 = directed_cycle(3).unwrap();
        let tt3 = transitive_tournament(3).unwrap();
        assert!(contains_copy(&c3, &tt3).is_none());
        let hom = contains_copy(&transitive_tournament(5).unwrap(), &tt3).unwrap();
        assert!(hom.is_injective());
        assert!(contains_copy(&tt3, &transitive_tournament(4).unwrap()).is_none());
    }

    #[test]
    fn pinned_search() {
        let c3 = directed_cycle(3).unwrap();
        let p3 = directed_path(3).unwrap();
        let hom = hom_exists_pinned(&p3, &c3, &[(2, 0)]).unwrap().unwrap();
        assert_eq!(hom.map(), &[1, 2, 0]);
        let tt3 = transitive_tournament(3).unwrap();
        assert!(hom_exists_pinned(&p3, &tt3, &[(0, 1)]).unwrap().is_none());
        assert!(hom_exists_pinned(&p3, &tt3, &[(3, 0)]).is_err());
    }

    #[test]
    fn disconnected_sources_do_not_thrash() {
        // eight disjoint copies of C_3 -> TT_3 has no solution; each component fails alone
        let c3 = directed_cycle(3).unwrap();
        let many = composition(&OrientedGraph::empty(8).unwrap(), &c3).unwrap();
        let target = arrow_join(&transitive_tournament(3).unwrap(), &c3).unwrap();
        assert!(hom_exists(&many, &target).is_some());
        assert!(hom_exists(&many, &transitive_tournament(6).unwrap()).is_none());
    }

    #[test]
    fn counting() {
        let p2 = directed_path(2).unwrap();
        assert_eq!(count_homs(&p2, &transitive_tournament(2).unwrap()).unwrap(), 1);
        assert_eq!(count_homs(&p2, &directed_cycle(3).unwrap()).unwrap(), 3);
        assert_eq!(count_homs(&OrientedGraph::empty(0).unwrap(), &p2).unwrap(), 1);
        let big = OrientedGraph::empty(12).unwrap();
        assert!(count_homs(&big, &transitive_tournament(5).unwrap()).unwrap_err().is_cap());
    }

    #[test]
    fn domination_embedding() {
        let c3 = directed_cycle(3).unwrap();
        let c33 = composition(&c3, &c3).unwrap();
        let mut r = rng(11);
        for _ in 0..50 {
            let h = random_dk(10, 2, 6, &mut r);
            let hom = embed_via_domination(&h, &c33, 2).unwrap();
            assert!(is_homomorphism(hom.map(), &h, &c33).unwrap());
        }
        let star = bipartite_oriented(1, 3).unwrap();
        assert!(matches!(embed_via_domination(&star, &c33, 2), Err(Error::Precondition(_))));
        // TT_5 leaves its source undominated
        let tt5 = transitive_tournament(5).unwrap();
        assert!(matches!(
            embed_via_domination(&directed_path(2).unwrap(), &tt5, 2),
            Err(Error::Undominated(_))
        ));
        assert_eq!(embed_via_domination(&c3, &c33, 2), Err(Error::Cyclic));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn search_agrees_with_counting(seed in any::<u64>(), hn in 0usize..7, tn in 1usize..6) {
            let mut r = rng(seed);
            let h = random_oriented(hn, &mut r);
            let t = random_tournament(tn, &mut r);
            let found = hom_exists(&h, &t);
            prop_assert_eq!(found.is_some(), count_homs(&h, &t).unwrap() > 0);
        }

        #[test]
        fn homomorphisms_compose(seed in any::<u64>()) {
            let mut r = rng(seed);
            let h = random_oriented(5, &mut r);
            let g = random_tournament(5, &mut r);
            let t = random_tournament(6, &mut r);
            if let (Some(a), Some(b)) = (hom_exists(&h, &g), hom_exists(&g, &t)) {
                prop_assert!(is_homomorphism(a.then(&b).map(), &h, &t).unwrap());
                prop_assert!(hom_exists(&h, &t).is_some());
            }
        }
    }
}
