//! Canonical codes for small oriented graphs.
//!
//! A code is the lexicographically least adjacency bit string over a set of
//! vertex orderings that is chosen without looking at vertex labels, so
//! isomorphic graphs get equal codes. Tournaments use the upper-triangle bits
//! of the native hex format; other graphs use the full row-major `n x n`
//! matrix.
//!
//! Two independent implementations are provided, and their codes differ in
//! general. [`canonical_code`] searches the orderings compatible with an
//! equitable partition refined from (out-degree, in-degree) classes,
//! individualizing one vertex at a time. [`canonical_code_by_degree_classes`]
//! tries every ordering that sorts vertices by degree class, which is slower
//! but has almost no moving parts.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{pack_bits, pairs, tournament_from_bytes};
use crate::graph::{bit, bits, OrientedGraph, Tournament};

/// Largest graph accepted by the canonical labelling routines.
pub const CANON_CAP: usize = 12;

/// Largest graph accepted by the degree-class permutation canonizer.
pub const DEGREE_CLASS_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CodeKind {
    Tournament,
    Oriented,
}

/// Isomorphism-invariant certificate: equal codes iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    kind: CodeKind,
    n: usize,
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Record width in bytes for codes of this kind and order.
    pub fn width(kind: CodeKind, n: usize) -> usize {
        match kind {
            CodeKind::Tournament => pairs(n).div_ceil(8),
            CodeKind::Oriented => (n * n).div_ceil(8),
        }
    }

    pub(crate) fn from_parts(kind: CodeKind, n: usize, bytes: Vec<u8>) -> Self {
        CanonicalCode { kind, n, bytes }
    }

    /// The canonical representative this code describes.
    pub fn to_graph(&self) -> Result<OrientedGraph> {
        match self.kind {
            CodeKind::Tournament => Ok(tournament_from_bytes(self.n, &self.bytes)?.into_inner()),
            CodeKind::Oriented => {
                let n = self.n;
                if self.bytes.len() != Self::width(CodeKind::Oriented, n) {
                    return Err(Error::Parse("oriented code has the wrong width".into()));
                }
                let rows = (0..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&j| crate::format::get_bit(&self.bytes, i * n + j))
                            .fold(0u64, |m, j| m | bit(j))
                    })
                    .collect();
                OrientedGraph::from_out_rows(rows)
            }
        }
    }

    pub fn to_tournament(&self) -> Result<Tournament> {
        Tournament::try_from(self.to_graph()?)
    }
}

fn check_cap(g: &OrientedGraph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "canonical labelling vertices",
            value: g.order() as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

fn kind_of(g: &OrientedGraph) -> CodeKind {
    if g.is_tournament() {
        CodeKind::Tournament
    } else {
        CodeKind::Oriented
    }
}

/// Code of `g` with vertex `ord[i]` placed at position `i`.
pub fn code_of_ordering(g: &OrientedGraph, ord: &[usize]) -> CanonicalCode {
    let kind = kind_of(g);
    let n = ord.len();
    let bytes = match kind {
        CodeKind::Tournament => pack_bits(
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.has_arc(ord[i], ord[j])),
        ),
        CodeKind::Oriented => {
            pack_bits((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.has_arc(ord[i], ord[j])))
        }
    };
    CanonicalCode { kind, n, bytes }
}

/// Ordered partition refinement state.
struct Refiner<'a> {
    g: &'a OrientedGraph,
}

impl Refiner<'_> {
    /// Refines `cells` to the coarsest equitable ordered partition below it.
    ///
    /// Each round splits every cell by the vector of out- and in-neighbour
    /// counts into each current cell; split pieces stay in place, ordered by
    /// that vector. The procedure commutes with relabelling.
    fn refine(&self, cells: &mut Vec<u64>) {
        loop {
            let mut next: Vec<u64> = Vec::with_capacity(cells.len());
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut sigs: Vec<(u128, usize)> = bits(cell).map(|v| (self.signature(v, cells), v)).collect();
                sigs.sort_unstable();
                let mut piece = 0u64;
                for (i, &(s, v)) in sigs.iter().enumerate() {
                    if i > 0 && sigs[i - 1].0 != s {
                        next.push(piece);
                        piece = 0;
                    }
                    piece |= bit(v);
                }
                next.push(piece);
            }
            let done = next.len() == cells.len();
            *cells = next;
            if done {
                return;
            }
        }
    }

    /// Per-cell out/in neighbour counts packed four bits each.
    fn signature(&self, v: usize, cells: &[u64]) -> u128 {
        let (out, inn) = (self.g.out_mask(v), self.g.in_mask(v));
        cells.iter().fold(0u128, |acc, &c| {
            let o = (out & c).count_ones() as u128;
            let i = (inn & c).count_ones() as u128;
            (acc << 8) | (o << 4) | i
        })
    }

    /// Whether swapping `u` and `v` is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let g = self.g;
        let others = !(bit(u) | bit(v));
        !g.adjacent(u, v)
            && g.out_mask(u) & others == g.out_mask(v) & others
            && g.in_mask(u) & others == g.in_mask(v) & others
    }

    fn search(&self, cells: Vec<u64>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
        let mut cells = cells;
        self.refine(&mut cells);
        let Some(pos) = cells.iter().position(|c| c.count_ones() > 1) else {
            let ord: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = code_of_ordering(self.g, &ord);
            if best.as_ref().is_none_or(|(b, _)| code.cmp(b) == Ordering::Less) {
                *best = Some((code, ord));
            }
            return;
        };
        let target = cells[pos];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(target) {
            // Swapping twins maps one subtree onto the other.
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..pos]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[pos + 1..]);
            self.search(child, best);
        }
    }
}

fn degree_key(g: &OrientedGraph, v: usize) -> (usize, usize) {
    (g.out_degree(v), g.in_degree(v))
}

/// Initial ordered partition: vertex classes by (out-degree, in-degree), ascending.
fn degree_cells(g: &OrientedGraph) -> Vec<u64> {
    let mut keys: Vec<(usize, usize)> = (0..g.order()).map(|v| degree_key(g, v)).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.iter()
        .map(|&k| (0..g.order()).filter(|&v| degree_key(g, v) == k).fold(0u64, |m, v| m | bit(v)))
        .collect()
}

/// Canonical code and an ordering realizing it (`ord[i]` is the original
/// vertex at canonical position `i`).
pub fn canonical_form(g: &OrientedGraph) -> Result<(CanonicalCode, Vec<usize>)> {
    check_cap(g, CANON_CAP)?;
    if g.order() == 0 {
        return Ok((code_of_ordering(g, &[]), Vec::new()));
    }
    let mut best = None;
    Refiner { g }.search(degree_cells(g), &mut best);
    Ok(best.expect("at least one leaf"))
}

pub fn canonical_code(g: &OrientedGraph) -> Result<CanonicalCode> {
    canonical_form(g).map(|(c, _)| c)
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(g: &OrientedGraph) -> Result<OrientedGraph> {
    let (_, ord) = canonical_form(g)?;
    Ok(g.induced_ordered(&ord))
}

/// Isomorphism test by code comparison; graphs of different order are never isomorphic.
pub fn are_isomorphic(g: &OrientedGraph, h: &OrientedGraph) -> Result<bool> {
    if g.order() != h.order() || g.arc_count() != h.arc_count() {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

/// Minimum code over all orderings that list degree classes in ascending
/// (out-degree, in-degree) order.
pub fn canonical_code_by_degree_classes(g: &OrientedGraph) -> Result<CanonicalCode> {
    check_cap(g, DEGREE_CLASS_CAP)?;
    let classes: Vec<Vec<usize>> = degree_cells(g).into_iter().map(|c| bits(c).collect()).collect();
    let mut best: Option<CanonicalCode> = None;
    let mut ord: Vec<usize> = Vec::with_capacity(g.order());
    permute_classes(g, &classes, 0, &mut ord, &mut best);
    Ok(best.unwrap_or_else(|| code_of_ordering(g, &[])))
}

fn permute_classes(
    g: &OrientedGraph,
    classes: &[Vec<usize>],
    ci: usize,
    ord: &mut Vec<usize>,
    best: &mut Option<CanonicalCode>,
) {
    if ci == classes.len() {
        let code = code_of_ordering(g, ord);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let mut class = classes[ci].clone();
    let len = class.len();
    heap_permutations(&mut class, len, &mut |perm| {
        let mark = ord.len();
        ord.extend_from_slice(perm);
        permute_classes(g, classes, ci + 1, ord, best);
        ord.truncate(mark);
    });
}

/// Heap's algorithm.
fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// Every permutation of `0..n`, used by oracles in tests and checks.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permutations(&mut items, n, &mut |p| out.push(p.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::random::{random_oriented, random_permutation, random_tournament, rng};
    use proptest::prelude::*;

    fn brute_isomorphic(g: &OrientedGraph, h: &OrientedGraph) -> bool {
        g.order() == h.order() && all_permutations(g.order()).iter().any(|p| g.relabel(p).unwrap() == *h)
    }

    #[test]
    fn triangle_codes() {
        let c3 = directed_cycle(3).unwrap();
        let tt3 = transitive_tournament(3).unwrap();
        assert_ne!(canonical_code(&c3).unwrap(), canonical_code(&tt3).unwrap());
        assert_eq!(canonical_code(&tt3).unwrap().bytes(), &[0x00]);
        let c52 = power_cycle(5, 2).unwrap();
        let c53 = power_cycle(5, 3).unwrap();
        assert!(are_isomorphic(&c52, &c53).unwrap());
        assert!(!are_isomorphic(&c3, &directed_path(3).unwrap()).unwrap());
        assert!(!are_isomorphic(&c3, &c52).unwrap());
    }

    #[test]
    fn code_round_trip() {
        let g = power_path(7, 3).unwrap();
        let code = canonical_code(&g).unwrap();
        let back = code.to_graph().unwrap();
        assert_eq!(canonical_code(&back).unwrap(), code);
        assert_eq!(canonical_graph(&g).unwrap(), back);
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        let g = OrientedGraph::empty(12).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), code_of_ordering(&g, &(0..12).collect::<Vec<_>>()));
        let b = bipartite_oriented(6, 6).unwrap();
        assert!(are_isomorphic(&b, &b.relabel(&[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap()).unwrap());
    }

    #[test]
    fn cap() {
        assert!(canonical_code(&OrientedGraph::empty(13).unwrap()).unwrap_err().is_cap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn equal_codes_iff_isomorphic(seed in any::<u64>(), n in 0usize..7, tour in any::<bool>(), same in any::<bool>()) {
            let mut r = rng(seed);
            let draw = |r: &mut rand_chacha::ChaCha8Rng| -> OrientedGraph {
                if tour { random_tournament(n, r).into() } else { random_oriented(n, r) }
            };
            let g = draw(&mut r);
            let h = if same { g.relabel(&random_permutation(n, &mut r)).unwrap() } else { draw(&mut r) };
            let iso = brute_isomorphic(&g, &h);
            prop_assert_eq!(canonical_code(&g).unwrap() == canonical_code(&h).unwrap(), iso);
            prop_assert_eq!(
                canonical_code_by_degree_classes(&g).unwrap() == canonical_code_by_degree_classes(&h).unwrap(),
                iso
            );
            prop_assert!(brute_isomorphic(&canonical_code(&g).unwrap().to_graph().unwrap(), &g));
        }

        #[test]
        fn invariant_under_relabelling(seed in any::<u64>(), n in 0usize..13) {
            let mut r = rng(seed);
            let t = random_tournament(n, &mut r);
            let p = random_permutation(n, &mut r);
            prop_assert_eq!(canonical_code(&t).unwrap(), canonical_code(&t.relabel(&p).unwrap()).unwrap());
        }
    }
}
