//! Brute-force oracles shared by the integration tests. They use only the
//! adjacency accessors of `OrientedGraph`, never the library's searches.
#![allow(dead_code)]

use std::collections::HashSet;

use ogt_core::OrientedGraph;

/// All permutations of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Whether some bijection maps the arcs of `g` exactly onto those of `h`.
pub fn brute_isomorphic(g: &OrientedGraph, h: &OrientedGraph) -> bool {
    let n = g.order();
    if n != h.order() || g.arc_count() != h.arc_count() {
        return false;
    }
    let arcs: Vec<(usize, usize)> = g.arcs().map(|a| (a.source, a.target)).collect();
    permutations(n)
        .iter()
        .any(|p| arcs.iter().all(|&(u, v)| h.has_arc(p[u], p[v])))
}

/// Number of maps `V(h) -> V(t)` preserving arcs, by plain enumeration.
pub fn brute_hom_count(h: &OrientedGraph, t: &OrientedGraph) -> u64 {
    let (hn, tn) = (h.order(), t.order());
    let arcs: Vec<(usize, usize)> = h.arcs().map(|a| (a.source, a.target)).collect();
    let total = (tn as u64).pow(hn as u32);
    (0..total)
        .filter(|&code| {
            let mut map = vec![0usize; hn];
            let mut c = code;
            for m in map.iter_mut() {
                *m = (c % tn as u64) as usize;
                c /= tn as u64;
            }
            arcs.iter().all(|&(u, v)| t.has_arc(map[u], map[v]))
        })
        .count() as u64
}

/// Whether `map` is an arc-preserving map `h -> t`, checked arc by arc.
pub fn preserves_arcs(map: &[usize], h: &OrientedGraph, t: &OrientedGraph) -> bool {
    map.len() == h.order()
        && map.iter().all(|&x| x < t.order())
        && h.arcs().all(|a| t.has_arc(map[a.source], map[a.target]))
}

pub fn injective(map: &[usize]) -> bool {
    let set: HashSet<_> = map.iter().collect();
    set.len() == map.len()
}

/// Labelled tournament from upper-triangle bits, pair `(i, j)` with `i < j`
/// in lexicographic order, bit set iff `i -> j`.
pub fn labelled_tournament(n: usize, bits: u64) -> OrientedGraph {
    let mut arcs = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
            k += 1;
        }
    }
    OrientedGraph::from_arcs(n, arcs).unwrap()
}

/// Number of isomorphism classes of tournaments on `n` vertices, by taking
/// the least relabelled bit string of every labelled tournament.
pub fn brute_tournament_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for bits in 0u64..1 << pairs.len() {
        // adjacency of the labelled tournament
        let up = |i: usize, j: usize| -> bool {
            if i < j {
                bits >> pairs.iter().position(|&p| p == (i, j)).unwrap() & 1 == 1
            } else {
                bits >> pairs.iter().position(|&p| p == (j, i)).unwrap() & 1 == 0
            }
        };
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj[i][j] = up(i, j);
                }
            }
        }
        let best = perms
            .iter()
            .map(|p| {
                // relabelled graph: arc p[i] -> p[j] iff i -> j, read back in pair order
                let mut inv = vec![0; n];
                for (i, &x) in p.iter().enumerate() {
                    inv[x] = i;
                }
                pairs
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (k, &(a, b))| acc | (u64::from(adj[inv[a]][inv[b]]) << k))
            })
            .min()
            .unwrap();
        classes.insert(best);
    }
    classes.len()
}

/// Labelled oriented graph number `index` with base-3 digits per pair
/// (0 absent, 1 `i -> j`, 2 `j -> i`), least significant pair first.
pub fn labelled_oriented(n: usize, mut index: u64) -> OrientedGraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match index % 3 {
                1 => arcs.push((i, j)),
                2 => arcs.push((j, i)),
                _ => {}
            }
            index /= 3;
        }
    }
    OrientedGraph::from_arcs(n, arcs).unwrap()
}

/// Number of isomorphism classes of oriented graphs on `n` vertices.
pub fn brute_oriented_classes(n: usize) -> usize {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut classes = HashSet::new();
    for index in 0..3u64.pow(pairs as u32) {
        let g = labelled_oriented(n, index);
        let best = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for i in 0..n {
                    for j in i + 1..n {
                        // digit for pair (i, j) of the relabelled graph
                        let (a, b) = (inv(p, i), inv(p, j));
                        let d = if g.has_arc(a, b) {
                            1
                        } else if g.has_arc(b, a) {
                            2
                        } else {
                            0
                        };
                        code = code * 3 + d;
                    }
                }
                code
            })
            .min()
            .unwrap();
        classes.insert(best);
    }
    classes.len()
}

fn inv(p: &[usize], x: usize) -> usize {
    p.iter().position(|&y| y == x).unwrap()
}

/// Cyclic triangles by enumerating every triple.
pub fn brute_c3(t: &OrientedGraph) -> usize {
    let n = t.order();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a))
                    || (t.has_arc(a, c) && t.has_arc(c, b) && t.has_arc(b, a))
                {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Whether some vertex has an arc to every vertex of `set`.
pub fn brute_dominated(t: &OrientedGraph, set: &[usize]) -> bool {
    (0..t.order()).any(|d| set.iter().all(|&s| t.has_arc(d, s)))
}

/// Whether `u` and `v` are joined by a directed path of length at most 2.
pub fn brute_joined(g: &OrientedGraph, u: usize, v: usize) -> bool {
    let one_way = |a: usize, b: usize| g.has_arc(a, b) || (0..g.order()).any(|x| g.has_arc(a, x) && g.has_arc(x, b));
    one_way(u, v) || one_way(v, u)
}

/// Vertex count of a longest directed path in an acyclic graph.
pub fn brute_longest_path(g: &OrientedGraph) -> usize {
    fn from(g: &OrientedGraph, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let best = 1 + (0..g.order()).filter(|&w| g.has_arc(v, w)).map(|w| from(g, w, memo)).max().unwrap_or(0);
        memo[v] = Some(best);
        best
    }
    let mut memo = vec![None; g.order()];
    (0..g.order()).map(|v| from(g, v, &mut memo)).max().unwrap_or(0)
}
