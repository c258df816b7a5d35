//! Oriented clique numbers.
//!
//! Two vertices are *joined* within a vertex set `S` when a directed path of
//! length at most 2 inside `S` connects them in either direction. An o-clique
//! is a graph in which every pair is joined.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, OrientedGraph};

/// Largest graph accepted by the exponential subset searches.
pub const OMEGA_CAP: usize = 24;

fn check_cap(h: &OrientedGraph) -> Result<()> {
    if h.order() > OMEGA_CAP {
        return Err(Error::CapExceeded {
            what: "oriented clique search vertices",
            value: h.order() as u64,
            cap: OMEGA_CAP as u64,
        });
    }
    Ok(())
}

/// Symmetric "joined within `within`" relation as neighbour masks.
fn joined_rows(h: &OrientedGraph, within: u64) -> Vec<u64> {
    let n = h.order();
    let mut reach2 = vec![0u64; n];
    for u in bits(within) {
        let direct = h.out_mask(u) & within;
        let mut r = direct;
        for w in bits(direct) {
            r |= h.out_mask(w) & within;
        }
        reach2[u] = r & !bit(u);
    }
    let mut rows = reach2.clone();
    for u in bits(within) {
        for v in bits(reach2[u]) {
            rows[v] |= bit(u);
        }
    }
    rows
}

fn is_clique(rows: &[u64], set: u64) -> bool {
    bits(set).all(|v| rows[v] & set == set & !bit(v))
}

/// Whether every two vertices of `h` are joined by a directed path of length <= 2.
pub fn is_o_clique(h: &OrientedGraph) -> bool {
    let all = h.vertex_mask();
    is_clique(&joined_rows(h, all), all)
}

/// Relative oriented clique number: the largest `S` whose vertices are
/// pairwise joined by short paths anywhere in `h`.
pub fn omega_ro(h: &OrientedGraph) -> Result<usize> {
    check_cap(h)?;
    let rows = joined_rows(h, h.vertex_mask());
    let mut best = 0;
    max_clique(&rows, 0, h.vertex_mask(), &mut best);
    Ok(best)
}

fn max_clique(rows: &[u64], size: usize, cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut cand = cand;
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        max_clique(rows, size + 1, cand & rows[v], best);
    }
    *best = (*best).max(size);
}

/// Absolute oriented clique number: the largest `S` whose induced subgraph
/// is an o-clique.
pub fn omega_ao(h: &OrientedGraph) -> Result<usize> {
    check_cap(h)?;
    // Any o-clique is a clique of the global joined relation.
    let rows = joined_rows(h, h.vertex_mask());
    let mut best = 0;
    ao_search(h, &rows, 0, h.vertex_mask(), &mut best);
    Ok(best)
}

fn ao_search(h: &OrientedGraph, rows: &[u64], set: u64, cand: u64, best: &mut usize) {
    let size = set.count_ones() as usize;
    if size > *best && is_clique(&joined_rows(h, set), set) {
        *best = size;
    }
    let mut cand = cand;
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        ao_search(h, rows, set | bit(v), cand & rows[v], best);
    }
}
