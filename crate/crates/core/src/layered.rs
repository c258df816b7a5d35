//! Layered graphs, the `Q_ℓ` gadget and the homomorphisms built from them.
//!
//! An acyclic graph is `ℓ`-layered when every vertex that is neither a source
//! nor a sink has a type `(i, j)`: every path from a source to it has length
//! `≡ i` and every path from it to a sink has length `≡ j (mod ℓ)`.
//!
//! `Q_ℓ` has the vertices `(a, b)` of `Z_ℓ²`, stored as `a * ℓ + b`, arranged
//! in cycles `(a, b) -> (a + 1, b - 1)`, plus a source `v_s = ℓ²` with arcs to
//! every `(1, i)` and a sink `v_t = ℓ² + 1` with arcs from every `(i, 1)` and
//! from `v_s`.

use serde::{Deserialize, Serialize};

use crate::construct::{arrow_join, directed_cycle, transitive_tournament};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, OrientedGraph, Tournament, MAX_VERTICES};
use crate::hom::{hom_exists, hom_exists_pinned, Homomorphism};
use crate::structure::{
    hamiltonian_path, longest_path_from, on_triangle, topological_order, triangle_through,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexTag {
    Source,
    Sink,
    /// No incident arcs at all.
    Isolated,
    Type(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerTyping {
    pub ell: usize,
    pub tags: Vec<VertexTag>,
}

/// A vertex whose path lengths are not determined modulo `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerConflict {
    pub vertex: usize,
    /// Residues of source-to-vertex path lengths.
    pub from_sources: Vec<usize>,
    /// Residues of vertex-to-sink path lengths.
    pub to_sinks: Vec<usize>,
}

fn residues(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Shift of a residue set by one, modulo `ell`.
fn shift(mask: u64, ell: usize) -> u64 {
    let top = bit(ell - 1);
    ((mask & !top) << 1) | u64::from(mask & top != 0)
}

/// Layer typing, or the first vertex that prevents it.
pub fn check_layers(h: &OrientedGraph, ell: usize) -> Result<std::result::Result<LayerTyping, LayerConflict>> {
    if !(2..=64).contains(&ell) {
        return Err(Error::InvalidParameter(format!("modulus {ell} outside 2..=64")));
    }
    let order = topological_order(h).ok_or(Error::Cyclic)?;
    let n = h.order();
    let mut from = vec![0u64; n];
    for &v in &order {
        from[v] = if h.in_mask(v) == 0 {
            1
        } else {
            bits(h.in_mask(v)).fold(0, |m, u| m | shift(from[u], ell))
        };
    }
    let mut to = vec![0u64; n];
    for &v in order.iter().rev() {
        to[v] = if h.out_mask(v) == 0 {
            1
        } else {
            bits(h.out_mask(v)).fold(0, |m, w| m | shift(to[w], ell))
        };
    }
    let mut tags = Vec::with_capacity(n);
    for v in 0..n {
        let (src, snk) = (h.in_mask(v) == 0, h.out_mask(v) == 0);
        tags.push(match (src, snk) {
            (true, true) => VertexTag::Isolated,
            (true, false) => VertexTag::Source,
            (false, true) => VertexTag::Sink,
            (false, false) => {
                if from[v].count_ones() != 1 || to[v].count_ones() != 1 {
                    return Ok(Err(LayerConflict {
                        vertex: v,
                        from_sources: residues(from[v]),
                        to_sinks: residues(to[v]),
                    }));
                }
                VertexTag::Type(from[v].trailing_zeros() as usize, to[v].trailing_zeros() as usize)
            }
        });
    }
    Ok(Ok(LayerTyping { ell, tags }))
}

/// The layer typing of `h` modulo `ell`, if `h` is `ell`-layered.
pub fn layer_typing(h: &OrientedGraph, ell: usize) -> Result<Option<LayerTyping>> {
    Ok(check_layers(h, ell)?.ok())
}

/// Replaces every arc by a directed path with `ell` arcs. New vertices are
/// appended arc by arc, in the order of [`OrientedGraph::arcs`].
pub fn subdivide(h: &OrientedGraph, ell: usize) -> Result<OrientedGraph> {
    if ell == 0 {
        return Err(Error::InvalidParameter("paths need at least one arc".into()));
    }
    let total = h.order() + h.arc_count() * (ell - 1);
    if total > MAX_VERTICES {
        return Err(Error::TooLarge {
            n: total,
            cap: MAX_VERTICES,
        });
    }
    let mut arcs = Vec::new();
    let mut next = h.order();
    for a in h.arcs() {
        let mut prev = a.source;
        for _ in 1..ell {
            arcs.push((prev, next));
            prev = next;
            next += 1;
        }
        arcs.push((prev, a.target));
    }
    OrientedGraph::from_arcs(total, arcs)
}

/// Paths of the given lengths (in arcs) from a common start `0` to a common
/// end `1`; interior vertices are numbered path by path.
pub fn glued_paths(lengths: &[usize]) -> Result<OrientedGraph> {
    if lengths.iter().filter(|&&l| l == 1).count() > 1 || lengths.contains(&0) {
        return Err(Error::InvalidParameter("lengths must be positive, with at most one direct arc".into()));
    }
    let total = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    if total > MAX_VERTICES {
        return Err(Error::TooLarge {
            n: total,
            cap: MAX_VERTICES,
        });
    }
    let mut arcs = Vec::new();
    let mut next = 2;
    for &l in lengths {
        let mut prev = 0;
        for _ in 1..l {
            arcs.push((prev, next));
            prev = next;
            next += 1;
        }
        arcs.push((prev, 1));
    }
    OrientedGraph::from_arcs(total, arcs)
}

/// Index of `(a, b)` in `Q_ℓ`, coordinates taken modulo `ℓ`.
pub fn q_vertex(ell: usize, a: usize, b: usize) -> usize {
    (a % ell) * ell + b % ell
}

/// `(v_s, v_t)` of `Q_ℓ`.
pub fn q_terminals(ell: usize) -> (usize, usize) {
    (ell * ell, ell * ell + 1)
}

pub fn q_gadget(ell: usize) -> Result<OrientedGraph> {
    if !(3..=7).contains(&ell) {
        return Err(Error::InvalidParameter(format!("Q_l needs 3 <= l <= 7, got {ell}")));
    }
    let (vs, vt) = q_terminals(ell);
    let mut arcs = vec![(vs, vt)];
    for a in 0..ell {
        for b in 0..ell {
            arcs.push((q_vertex(ell, a, b), q_vertex(ell, a + 1, b + ell - 1)));
        }
    }
    for i in 0..ell {
        arcs.push((vs, q_vertex(ell, 1, i)));
        arcs.push((q_vertex(ell, i, 1), vt));
    }
    OrientedGraph::from_arcs(ell * ell + 2, arcs)
}

fn check_typing(h: &OrientedGraph, typing: &LayerTyping) -> Result<()> {
    let fresh = layer_typing(h, typing.ell)?;
    if fresh.as_ref() != Some(typing) {
        return Err(Error::Precondition("typing does not belong to this graph".into()));
    }
    Ok(())
}

/// Sources to `v_s`, sinks and isolated vertices to `v_t`, type `(i, j)` to `(i, j)`.
pub fn canonical_hom_to_q(h: &OrientedGraph, typing: &LayerTyping) -> Result<Homomorphism> {
    check_typing(h, typing)?;
    let ell = typing.ell;
    let q = q_gadget(ell)?;
    let (vs, vt) = q_terminals(ell);
    let map = typing
        .tags
        .iter()
        .map(|tag| match *tag {
            VertexTag::Source => vs,
            VertexTag::Sink | VertexTag::Isolated => vt,
            VertexTag::Type(i, j) => q_vertex(ell, i, j),
        })
        .collect();
    Homomorphism::certify(map, h, &q)
}

/// `C_ℓ ⇒ TT_1` with cycle vertices `0..ℓ` and the sink `ℓ`.
pub fn cycle_join(ell: usize) -> Result<OrientedGraph> {
    arrow_join(&directed_cycle(ell)?, &*transitive_tournament(1)?)
}

/// Sources to `w_0`, sinks and isolated vertices to the join sink, type
/// `(i, j)` to `w_i`.
pub fn hom_to_cycle_join(h: &OrientedGraph, typing: &LayerTyping) -> Result<Homomorphism> {
    check_typing(h, typing)?;
    let ell = typing.ell;
    if ell < 3 {
        return Err(Error::InvalidParameter("cycle join needs l >= 3".into()));
    }
    let target = cycle_join(ell)?;
    let map = typing
        .tags
        .iter()
        .map(|tag| match *tag {
            VertexTag::Source => 0,
            VertexTag::Sink | VertexTag::Isolated => ell,
            VertexTag::Type(i, _) => i,
        })
        .collect();
    Homomorphism::certify(map, h, &target)
}

/// Maps `v` to the vertex `ℓ(v)` steps from the end of a Hamiltonian path of
/// `t`, where `ℓ(v)` counts the vertices of a longest path starting at `v`.
/// Returns `None` when that map is not a homomorphism.
pub fn hamiltonian_level_map(h: &OrientedGraph, t: &Tournament) -> Result<Option<Homomorphism>> {
    let lens = longest_path_from(h)?;
    let path = hamiltonian_path(t);
    if lens.iter().any(|&l| l > path.len()) {
        return Ok(None);
    }
    let map: Vec<usize> = lens.iter().map(|&l| path[path.len() - l]).collect();
    Ok(Homomorphism::certify(map, h, t).ok())
}

/// Vertices meeting the premises of the small-gadget construction:
/// `u -> v`; `v -> w -> u`; `u -> z -> v` with `z` on a directed triangle;
/// `u -> x -> y -> v` with the arc `xy` on a directed triangle and on a
/// directed 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetPair {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub z: usize,
    pub x: usize,
    pub y: usize,
}

fn arc_on_c3(t: &OrientedGraph, x: usize, y: usize) -> bool {
    t.out_mask(y) & t.in_mask(x) != 0
}

fn arc_on_c4(t: &OrientedGraph, x: usize, y: usize) -> bool {
    // y -> a -> b -> x with a, b distinct from x, y
    let others = !(bit(x) | bit(y));
    bits(t.out_mask(y) & others).any(|a| t.out_mask(a) & t.in_mask(x) & others & !bit(a) != 0)
}

/// Gadget premises for the given `(u, v)`, least witnesses first.
pub fn gadget_pair_for(t: &OrientedGraph, u: usize, v: usize) -> Option<GadgetPair> {
    if !t.has_arc(u, v) {
        return None;
    }
    let w = bits(t.out_mask(v) & t.in_mask(u)).next()?;
    let z = bits(t.out_mask(u) & t.in_mask(v)).find(|&z| on_triangle(t, z))?;
    for x in bits(t.out_mask(u)) {
        for y in bits(t.out_mask(x) & t.in_mask(v)) {
            if arc_on_c3(t, x, y) && arc_on_c4(t, x, y) {
                return Some(GadgetPair { u, v, w, z, x, y });
            }
        }
    }
    None
}

/// First `(u, v)` in lexicographic order meeting the gadget premises.
pub fn find_gadget_pair(t: &OrientedGraph) -> Option<GadgetPair> {
    let n = t.order();
    (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).find_map(|(u, v)| gadget_pair_for(t, u, v))
}

/// `Q_3` or `Q_4` into `t`, starting from the placements the gadget pair
/// dictates and completing the rest by search.
pub fn q_hom_from_gadget(ell: usize, t: &OrientedGraph, g: &GadgetPair) -> Result<Option<Homomorphism>> {
    let q = q_gadget(ell)?;
    let (vs, vt) = q_terminals(ell);
    let mut pins = vec![
        (vs, g.u),
        (vt, g.v),
        (q_vertex(ell, 1, 1), g.z),
        (q_vertex(ell, 1, 2), g.x),
        (q_vertex(ell, 2, 1), g.y),
    ];
    match ell {
        3 => pins.extend([(q_vertex(3, 0, 1), g.u), (q_vertex(3, 1, 0), g.v)]),
        4 => pins.extend([(q_vertex(4, 3, 1), g.u), (q_vertex(4, 1, 3), g.v)]),
        _ => return Err(Error::InvalidParameter("gadget pairs serve l = 3 and l = 4".into())),
    }
    hom_exists_pinned(&q, t, &pins)
}

/// `Q_ℓ -> t`. Up to `ℓ = 5` this is a direct search. For `ℓ = 6, 7` each
/// cycle of `Q_ℓ` is shortened by 3 at a time, by sending the ends of a path
/// `a b c d` with `b`, `c` not adjacent to `v_s` or `v_t` to one vertex and
/// `b`, `c` around a directed triangle through it, until the cycles have
/// length `ℓ' ∈ {3, 4, 5}`; the shortened cycles then take their images from
/// a homomorphism `Q_ℓ' -> t`. Needs every vertex of `t` on a triangle.
pub fn reduce_and_map_q(ell: usize, t: &OrientedGraph) -> Result<Option<Homomorphism>> {
    let q = q_gadget(ell)?;
    if ell <= 5 {
        return Ok(hom_exists(&q, t));
    }
    if let Some(v) = (0..t.order()).find(|&v| !on_triangle(t, v)) {
        return Err(Error::Precondition(format!("vertex {v} lies on no directed triangle")));
    }
    let small = 3 + (ell - 3) % 3;
    let Some(base) = hom_exists(&q_gadget(small)?, t) else {
        return Ok(None);
    };
    let (vs, vt) = q_terminals(ell);
    let (svs, svt) = q_terminals(small);
    let mut map = vec![usize::MAX; q.order()];
    map[vs] = base.image(svs);
    map[vt] = base.image(svt);
    for i in 0..ell {
        // cycle D_i as (vertex, attached to v_s, attached to v_t), starting at j = 0
        let mut cyc: Vec<(usize, bool, bool)> = (0..ell)
            .map(|j| {
                let a = j;
                let b = (i + ell - j) % ell;
                (q_vertex(ell, a, b), a == 1, b == 1)
            })
            .collect();
        let mut removed: Vec<[usize; 4]> = Vec::new();
        while cyc.len() > 5 {
            let len = cyc.len();
            let p = (0..len)
                .find(|&p| {
                    let (b, c) = (cyc[(p + 1) % len], cyc[(p + 2) % len]);
                    !(b.1 || b.2 || c.1 || c.2)
                })
                .expect("at most two attached vertices on a cycle of length >= 6");
            let idx = [p, (p + 1) % len, (p + 2) % len, (p + 3) % len];
            removed.push(idx.map(|k| cyc[k].0));
            let d = cyc[idx[3]];
            cyc[idx[0]].1 |= d.1;
            cyc[idx[0]].2 |= d.2;
            let mut drop = [idx[1], idx[2], idx[3]];
            drop.sort_unstable();
            for k in drop.iter().rev() {
                cyc.remove(*k);
            }
        }
        let len = cyc.len();
        let ps = cyc.iter().position(|c| c.1).expect("v_s neighbour survives");
        let pt = cyc.iter().position(|c| c.2).expect("v_t neighbour survives");
        let offset = (pt + len - ps) % len;
        let target_cycle = (offset + 2) % len;
        for m in 0..len {
            let (a, b) = (1 + m, (target_cycle + 2 * len - 1 - m) % len);
            map[cyc[(ps + m) % len].0] = base.image(q_vertex(small, a, b));
        }
        for [a, b, c, d] in removed.into_iter().rev() {
            let x = map[a];
            let (y, z) = triangle_through(t, x).expect("checked above");
            map[b] = y;
            map[c] = z;
            map[d] = x;
        }
    }
    Homomorphism::certify(map, &q, t).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::hom::is_homomorphism;

    #[test]
    fn gadget_sizes() {
        for ell in 3..=7 {
            let q = q_gadget(ell).unwrap();
            assert_eq!(q.order(), ell * ell + 2);
            assert_eq!(q.arc_count(), ell * ell + 2 * ell + 1);
        }
        assert!(q_gadget(2).is_err());
        assert!(q_gadget(8).is_err());
        // (1, i) lies on the cycle with coordinate sum 1 + i
        let q = q_gadget(5).unwrap();
        let mut v = q_vertex(5, 1, 3);
        for _ in 0..5 {
            let next = q.out_mask(v) & crate::graph::full_mask(25);
            v = next.trailing_zeros() as usize;
            assert_eq!((v / 5 + v % 5) % 5, 4);
        }
    }

    #[test]
    fn typing_examples() {
        assert!(layer_typing(&power_path(7, 4).unwrap(), 3).unwrap().is_some());
        // path v1..v6 plus an arc v4 -> v
        let mut arcs: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        arcs.push((3, 6));
        let g = OrientedGraph::from_arcs(7, arcs).unwrap();
        for ell in 2..=8 {
            // v2 already reaches the two sinks along paths of lengths 4 and 3
            let conflict = check_layers(&g, ell).unwrap().unwrap_err();
            assert_eq!(conflict.vertex, 1);
            assert_eq!(conflict.to_sinks.len(), 2);
        }
        assert_eq!(check_layers(&directed_cycle(3).unwrap(), 3), Err(Error::Cyclic));
    }

    #[test]
    fn subdivisions() {
        let s = subdivide(&directed_path(2).unwrap(), 3).unwrap();
        assert!(crate::canon::are_isomorphic(&s, &directed_path(4).unwrap()).unwrap());
        let s = subdivide(&transitive_tournament(3).unwrap(), 2).unwrap();
        assert_eq!(s.order(), 6);
        assert!(layer_typing(&s, 2).unwrap().is_some());
    }

    #[test]
    fn canonical_maps() {
        let h = power_path(8, 4).unwrap();
        let typing = layer_typing(&h, 3).unwrap().unwrap();
        let hom = canonical_hom_to_q(&h, &typing).unwrap();
        assert!(is_homomorphism(hom.map(), &h, &q_gadget(3).unwrap()).unwrap());
        hom_to_cycle_join(&h, &typing).unwrap();
        let p2 = directed_path(2).unwrap();
        let typing = layer_typing(&p2, 3).unwrap().unwrap();
        assert_eq!(canonical_hom_to_q(&p2, &typing).unwrap().map(), &[9, 10]);
        assert_eq!(hom_to_cycle_join(&p2, &typing).unwrap().map(), &[0, 3]);
        let other = layer_typing(&directed_path(3).unwrap(), 3).unwrap().unwrap();
        assert!(canonical_hom_to_q(&p2, &other).is_err());
    }

    #[test]
    fn glued_boundary_graph() {
        let g = glued_paths(&[1, 2, 3, 4]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(crate::structure::longest_path_order(&g).unwrap(), 5);
    }

    #[test]
    fn gadget_pairs() {
        assert!(find_gadget_pair(&transitive_tournament(5).unwrap()).is_none());
        let ta = special_t(SpecialTournament::A);
        let g = gadget_pair_for(&ta, 3, 4).unwrap();
        for ell in [3, 4] {
            assert!(q_hom_from_gadget(ell, &ta, &g).unwrap().is_some());
        }
    }

    #[test]
    fn reduction() {
        for which in SpecialTournament::ALL {
            let t = special_t(which);
            for ell in 3..=7 {
                assert!(reduce_and_map_q(ell, &t).unwrap().is_some(), "{which:?} {ell}");
            }
        }
        assert!(matches!(
            reduce_and_map_q(6, &transitive_tournament(5).unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
