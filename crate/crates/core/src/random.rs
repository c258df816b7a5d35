//! Seeded random graph generators.
//!
//! All randomness comes from `ChaCha8Rng`. A seed `s` and stream `t` select
//! `ChaCha8Rng::seed_from_u64(s)` with `set_stream(t)`; a tournament consumes
//! one `bool` per pair `i < j` in lexicographic order (true means `i -> j`).
//! The same seed therefore reproduces the same graphs on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{OrientedGraph, Tournament};

/// Seed used when the caller does not provide one.
pub const DEFAULT_SEED: u64 = 0x6F67_7432;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for sub-stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform random labelled tournament.
pub fn random_tournament<R: Rng>(n: usize, rng: &mut R) -> Tournament {
    Tournament::from_fn(n, |_, _| rng.gen::<bool>()).expect("size checked by caller")
}

/// Random oriented graph: each pair is absent, forward or backward with equal odds.
pub fn random_oriented<R: Rng>(n: usize, rng: &mut R) -> OrientedGraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match rng.gen_range(0..3) {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
        }
    }
    OrientedGraph::from_arcs(n, arcs).expect("size checked by caller")
}

/// Random acyclic graph with out-degree at most `k` and longest path at most
/// `levels` vertices, with vertices shuffled.
///
/// Each vertex gets a level in `1..=levels`; a vertex on level `i > 1` picks
/// up to `k` out-neighbours on lower levels, at least one of them on level
/// `i - 1` when that level is nonempty.
pub fn random_dk<R: Rng>(n: usize, k: usize, levels: usize, rng: &mut R) -> OrientedGraph {
    let levels = levels.max(1);
    let mut level: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=levels)).collect();
    level.sort_unstable();
    let mut arcs = Vec::new();
    for v in 0..n {
        let below: Vec<usize> = (0..v).filter(|&w| level[w] < level[v]).collect();
        if below.is_empty() || k == 0 {
            continue;
        }
        let want = rng.gen_range(0..=k).min(below.len());
        let mut chosen: Vec<usize> = below.choose_multiple(rng, want).copied().collect();
        let prev: Vec<usize> = below.iter().copied().filter(|&w| level[w] + 1 == level[v]).collect();
        if !prev.is_empty() && !chosen.iter().any(|w| prev.contains(w)) {
            let w = *prev.choose(rng).unwrap();
            if chosen.len() == k {
                chosen.pop();
            }
            chosen.push(w);
        }
        arcs.extend(chosen.into_iter().map(|w| (v, w)));
    }
    let g = OrientedGraph::from_arcs(n, arcs).expect("size checked by caller");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("permutation")
}

/// Random acyclic oriented graph: pairs oriented along a hidden random order, each present with probability `density`.
pub fn random_acyclic<R: Rng>(n: usize, density: f64, rng: &mut R) -> OrientedGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                arcs.push((perm[i], perm[j]));
            }
        }
    }
    OrientedGraph::from_arcs(n, arcs).expect("size checked by caller")
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::longest_path_order;

    #[test]
    fn dk_respects_bounds() {
        let mut r = rng(7);
        for _ in 0..200 {
            let g = random_dk(10, 2, 4, &mut r);
            assert!(g.max_out_degree() <= 2);
            assert!(longest_path_order(&g).unwrap() <= 4);
        }
    }

    #[test]
    fn reproducible() {
        let a = random_tournament(9, &mut stream_rng(1, 5));
        let b = random_tournament(9, &mut stream_rng(1, 5));
        let c = random_tournament(9, &mut stream_rng(1, 6));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
