//! Named graphs and graph operators.
//!
//! Vertex labels are dense indices. Where a construction is usually written
//! with 1-based labels `v_1, ..., v_k` (or `w_1, ..., w_5`), label `v_i` is
//! stored as index `i - 1`.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Arc, OrientedGraph, Tournament, MAX_VERTICES};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn check_total(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Builds a graph from a validated arc list (internal constructions only).
pub fn make_oriented(n: usize, arcs: &[Arc]) -> Result<OrientedGraph> {
    OrientedGraph::from_arcs(n, arcs.iter().copied())
}

/// `TT_k`: arcs `i -> j` for all `i < j`.
pub fn transitive_tournament(k: usize) -> Result<Tournament> {
    Tournament::from_fn(k, |_, _| true)
}

/// Arcless graph on `n` vertices.
pub fn independent_set(n: usize) -> Result<OrientedGraph> {
    OrientedGraph::empty(n)
}

/// `P_k`: arcs `i -> i+1`.
pub fn directed_path(k: usize) -> Result<OrientedGraph> {
    if k == 0 {
        return Err(invalid("directed path needs at least one vertex"));
    }
    OrientedGraph::from_arcs(k, (1..k).map(|i| (i - 1, i)))
}

/// `C_k`: arcs `i -> i+1 (mod k)`.
pub fn directed_cycle(k: usize) -> Result<OrientedGraph> {
    if k < 3 {
        return Err(invalid(format!("directed cycle needs k >= 3, got {k}")));
    }
    OrientedGraph::from_arcs(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// `B_{s,t}`: every vertex of the first part points to every vertex of the second.
pub fn bipartite_oriented(s: usize, t: usize) -> Result<OrientedGraph> {
    if s == 0 || t == 0 {
        return Err(invalid("both parts of B(s,t) must be nonempty"));
    }
    arrow_join(&independent_set(s)?, &independent_set(t)?)
}

/// Directed path on `k` vertices plus arcs `v_i -> v_{i+ell}`.
pub fn power_path(k: usize, ell: usize) -> Result<OrientedGraph> {
    if !(2 <= ell && ell < k) {
        return Err(invalid(format!("power path needs 2 <= l < k, got k={k}, l={ell}")));
    }
    check_total(k)?;
    let arcs = (1..k)
        .map(|i| (i - 1, i))
        .chain((0..k - ell).map(|i| (i, i + ell)));
    OrientedGraph::from_arcs(k, arcs)
}

/// Cycle `w_0 .. w_{k-1}` with arcs `w_i -> w_{i+1}` and `w_i -> w_{i+ell}` (mod k).
pub fn power_cycle(k: usize, ell: usize) -> Result<OrientedGraph> {
    if !(2 <= ell && ell < k) {
        return Err(invalid(format!("power cycle needs 2 <= l < k, got k={k}, l={ell}")));
    }
    check_total(k)?;
    let arcs = (0..k).flat_map(|i| [(i, (i + 1) % k), (i, (i + ell) % k)]);
    OrientedGraph::from_arcs(k, arcs)
}

/// `G ⊙ H`: vertex `(g, h)` has index `g * |H| + h`.
pub fn composition(g: &OrientedGraph, h: &OrientedGraph) -> Result<OrientedGraph> {
    let (gn, hn) = (g.order(), h.order());
    check_total(gn * hn)?;
    let block = crate::graph::full_mask(hn);
    let mut rows = vec![0u64; gn * hn];
    for x in 0..gn {
        let mut between = 0u64;
        for y in bits(g.out_mask(x)) {
            between |= block << (y * hn);
        }
        for i in 0..hn {
            rows[x * hn + i] = between | (h.out_mask(i) << (x * hn));
        }
    }
    OrientedGraph::from_out_rows(rows)
}

/// `G ⇒ H`: disjoint union plus every arc from `G` to `H`.
pub fn arrow_join(g: &OrientedGraph, h: &OrientedGraph) -> Result<OrientedGraph> {
    let (gn, hn) = (g.order(), h.order());
    check_total(gn + hn)?;
    let hmask = crate::graph::full_mask(hn) << gn;
    let mut rows = Vec::with_capacity(gn + hn);
    rows.extend((0..gn).map(|v| g.out_mask(v) | hmask));
    rows.extend((0..hn).map(|v| h.out_mask(v) << gn));
    OrientedGraph::from_out_rows(rows)
}

/// Replaces vertex `v` by an independent set of `sizes[v]` vertices, in vertex order.
pub fn blow_up(g: &OrientedGraph, sizes: &[usize]) -> Result<OrientedGraph> {
    if sizes.len() != g.order() {
        return Err(invalid(format!(
            "blow-up needs {} part sizes, got {}",
            g.order(),
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(invalid("blow-up part sizes must be positive"));
    }
    let total: usize = sizes.iter().sum();
    check_total(total)?;
    let mut offset = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        offset.push(acc);
        acc += s;
    }
    let part = |v: usize| crate::graph::full_mask(sizes[v]) << offset[v];
    let mut rows = vec![0u64; total];
    for v in 0..g.order() {
        let targets = bits(g.out_mask(v)).fold(0u64, |m, w| m | part(w));
        for x in offset[v]..offset[v] + sizes[v] {
            rows[x] = targets;
        }
    }
    OrientedGraph::from_out_rows(rows)
}

/// Reverses every arc incident to `v`.
pub fn flip_vertex(t: &Tournament, v: usize) -> Result<Tournament> {
    let n = t.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut rows = t.out_rows().to_vec();
    let (out_v, in_v) = (t.out_mask(v), t.in_mask(v));
    rows[v] = in_v;
    for u in 0..n {
        if u == v {
            continue;
        }
        if out_v & bit(u) != 0 {
            rows[u] |= bit(v);
        } else if in_v & bit(u) != 0 {
            rows[u] &= !bit(v);
        }
    }
    Tournament::try_from(OrientedGraph::from_out_rows(rows)?)
}

/// The 7-vertex tournament: `TT_6` on `v_1..v_6` and `N+(v_7) = {v_1, v_2, v_4}`.
pub fn tilde_t7() -> Tournament {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            arcs.push((i, j));
        }
    }
    for v in 0..6 {
        if [0, 1, 3].contains(&v) {
            arcs.push((6, v));
        } else {
            arcs.push((v, 6));
        }
    }
    Tournament::try_from(OrientedGraph::from_arcs(7, arcs).expect("valid construction"))
        .expect("complete")
}

/// The five strongly connected 5-vertex tournaments other than `C_5^(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialTournament {
    /// `C_5^(3)` with the pair `w_1 w_4` reversed.
    A,
    /// `C_5^(2)` with the pair `w_1 w_4` reversed.
    B,
    /// `TT_5` with the source-sink arc reversed.
    C,
    /// `T_c` with the pair `w_3 w_5` reversed.
    D,
    /// `T_c` with the pair `w_2 w_4` reversed.
    E,
}

impl SpecialTournament {
    pub const ALL: [SpecialTournament; 5] = [
        SpecialTournament::A,
        SpecialTournament::B,
        SpecialTournament::C,
        SpecialTournament::D,
        SpecialTournament::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialTournament::A => "Ta",
            SpecialTournament::B => "Tb",
            SpecialTournament::C => "Tc",
            SpecialTournament::D => "Td",
            SpecialTournament::E => "Te",
        }
    }
}

/// Builds `T_a .. T_e`; vertex `w_i` is index `i - 1`.
pub fn special_t(which: SpecialTournament) -> Tournament {
    let cycle = |ell| Tournament::try_from(power_cycle(5, ell).expect("valid")).expect("complete");
    let tc = || {
        transitive_tournament(5)
            .and_then(|t| t.reverse_arc(0, 4))
            .expect("valid")
    };
    let t = match which {
        SpecialTournament::A => cycle(3).reverse_arc(0, 3),
        SpecialTournament::B => cycle(2).reverse_arc(0, 3),
        SpecialTournament::C => Ok(tc()),
        SpecialTournament::D => tc().reverse_arc(2, 4),
        SpecialTournament::E => tc().reverse_arc(1, 3),
    };
    t.expect("valid construction")
}

/// 11 vertices with arcs `v_i -> v_{i+j mod 11}` for `j in {1, 3, 4, 5, 9}`.
pub fn rotational_11() -> Tournament {
    const STEPS: [usize; 5] = [1, 3, 4, 5, 9];
    let arcs = (0..11).flat_map(|i| STEPS.iter().map(move |&j| (i, (i + j) % 11)));
    Tournament::try_from(OrientedGraph::from_arcs(11, arcs).expect("valid")).expect("complete")
}

/// Quadratic residue tournament on `Z_p`: `i -> j` iff `j - i` is a nonzero
/// square mod `p`. Needs a prime `p ≡ 3 (mod 4)`.
pub fn quadratic_residue_tournament(p: usize) -> Result<Tournament> {
    let prime = p >= 3 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !prime || p % 4 != 3 {
        return Err(invalid(format!("{p} is not a prime congruent to 3 mod 4")));
    }
    check_total(p)?;
    let squares: Vec<bool> = {
        let mut sq = vec![false; p];
        for x in 1..p {
            sq[x * x % p] = true;
        }
        sq
    };
    Tournament::from_fn(p, |i, j| squares[(j + p - i) % p])
}

/// Acyclic orientation of `K_{n,n}` whose longest path has `2n` vertices.
///
/// `a_i` is vertex `2(i-1)` and `b_j` is vertex `2(j-1)+1`; arcs `a_i -> b_j`
/// for `j >= i` and `b_j -> a_i` for `i > j`, so the vertex order is topological.
pub fn knn_orientation(n: usize) -> Result<OrientedGraph> {
    if n == 0 {
        return Err(invalid("knn orientation needs n >= 1"));
    }
    check_total(2 * n)?;
    let mut arcs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (2 * i, 2 * j + 1);
            if j >= i {
                arcs.push((a, b));
            } else {
                arcs.push((b, a));
            }
        }
    }
    OrientedGraph::from_arcs(2 * n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_acyclic, longest_path_order};

    #[test]
    fn quadratic_residues() {
        let q7 = quadratic_residue_tournament(7).unwrap();
        assert!((0..7).all(|v| q7.out_degree(v) == 3));
        assert!(q7.has_arc(0, 1) && q7.has_arc(0, 2) && q7.has_arc(0, 4) && q7.has_arc(3, 0));
        assert!(quadratic_residue_tournament(5).is_err());
        assert!(quadratic_residue_tournament(9).is_err());
    }

    #[test]
    fn transitive_tournaments() {
        let t3 = transitive_tournament(3).unwrap();
        let arcs: Vec<_> = t3.arcs().map(|a| (a.source, a.target)).collect();
        assert_eq!(arcs, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(transitive_tournament(1).unwrap().arc_count(), 0);
        let t5 = transitive_tournament(5).unwrap();
        assert_eq!(t5.arc_count(), 10);
        assert!(is_acyclic(&t5));
        assert!(transitive_tournament(65).is_err());
    }

    #[test]
    fn paths_cycles_bipartite() {
        assert_eq!(directed_path(4).unwrap().arc_count(), 3);
        assert_eq!(longest_path_order(&directed_path(4).unwrap()).unwrap(), 4);
        assert!(directed_cycle(3).unwrap().is_tournament());
        let b = bipartite_oriented(2, 3).unwrap();
        assert_eq!(b.arc_count(), 6);
        assert!((0..2).all(|v| b.out_degree(v) == 3));
        assert!(directed_path(0).is_err());
        assert!(directed_cycle(2).is_err());
        assert!(bipartite_oriented(0, 3).is_err());
    }

    #[test]
    fn power_paths() {
        let g = power_path(7, 3).unwrap();
        assert_eq!(g.arc_count(), 10);
        assert_eq!(longest_path_order(&g).unwrap(), 7);
        assert_eq!(power_path(4, 2).unwrap().arc_count(), 5);
        let g = power_path(5, 4).unwrap();
        assert_eq!((g.order(), g.arc_count()), (5, 5));
        assert!(power_path(4, 4).is_err());
        assert!(power_path(4, 1).is_err());
    }

    #[test]
    fn power_cycles() {
        let c52 = power_cycle(5, 2).unwrap();
        assert!(c52.is_tournament());
        assert!((0..5).all(|v| c52.out_degree(v) == 2));
        assert!(power_cycle(5, 3).unwrap().is_tournament());
        assert!(matches!(power_cycle(3, 2), Err(Error::Antisymmetry(_, _))));
    }

    #[test]
    fn composition_counts() {
        let c3 = directed_cycle(3).unwrap();
        let g = composition(&c3, &c3).unwrap();
        assert_eq!((g.order(), g.arc_count()), (9, 3 * 9 + 3 * 3));
        assert!(g.is_tournament());
        let p2 = directed_path(2).unwrap();
        let g = composition(&p2, &c3).unwrap();
        assert_eq!((g.order(), g.arc_count()), (6, 15));
        let one = transitive_tournament(1).unwrap();
        assert_eq!(composition(&one, &c3).unwrap(), c3);
        assert!(composition(&transitive_tournament(9).unwrap(), &transitive_tournament(8).unwrap()).is_err());
    }

    #[test]
    fn joins() {
        let pt = independent_set(1).unwrap();
        assert_eq!(arrow_join(&pt, &pt).unwrap(), directed_path(2).unwrap());
        assert_eq!(
            arrow_join(&independent_set(2).unwrap(), &independent_set(3).unwrap()).unwrap(),
            bipartite_oriented(2, 3).unwrap()
        );
        let inner = composition(&directed_path(2).unwrap(), &directed_cycle(3).unwrap()).unwrap();
        let g = arrow_join(&transitive_tournament(1).unwrap(), &inner).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.is_tournament());
    }

    #[test]
    fn blow_ups() {
        let c3 = directed_cycle(3).unwrap();
        assert_eq!(blow_up(&c3, &[1, 1, 1]).unwrap(), c3);
        let p2 = directed_path(2).unwrap();
        assert_eq!(blow_up(&p2, &[2, 3]).unwrap(), bipartite_oriented(2, 3).unwrap());
        let b = blow_up(&c3, &[2, 2, 2]).unwrap();
        assert_eq!((b.order(), b.arc_count()), (6, 12));
        assert!(!b.has_arc(0, 1) && !b.has_arc(1, 0));
        assert!(blow_up(&c3, &[1, 0, 1]).is_err());
        assert!(blow_up(&c3, &[1, 1]).is_err());
    }

    #[test]
    fn flips() {
        let c3 = Tournament::try_from(directed_cycle(3).unwrap()).unwrap();
        for v in 0..3 {
            let f = flip_vertex(&c3, v).unwrap();
            assert!(is_acyclic(&f));
            assert_eq!(flip_vertex(&f, v).unwrap(), c3);
        }
        assert!(flip_vertex(&c3, 3).is_err());
    }

    #[test]
    fn named_tournaments() {
        let t = tilde_t7();
        assert_eq!(t.order(), 7);
        assert_eq!(t.out_mask(6), 0b1011);
        let r = rotational_11();
        assert!((0..11).all(|v| r.out_degree(v) == 5));
        let tc = special_t(SpecialTournament::C);
        assert!(tc.has_arc(4, 0));
        let td = special_t(SpecialTournament::D);
        assert!(td.has_arc(4, 2));
        let te = special_t(SpecialTournament::E);
        assert!(te.has_arc(3, 1));
    }

    #[test]
    fn knn() {
        let h2 = knn_orientation(2).unwrap();
        assert_eq!(h2.arc_count(), 4);
        assert!(is_acyclic(&h2));
        assert_eq!(longest_path_order(&h2).unwrap(), 4);
        assert_eq!(knn_orientation(1).unwrap(), directed_path(2).unwrap());
        assert_eq!(longest_path_order(&knn_orientation(3).unwrap()).unwrap(), 6);
        assert!(knn_orientation(33).is_err());
    }
}
