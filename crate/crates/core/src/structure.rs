//! Acyclicity, longest paths, strong components and Hamiltonian paths.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, OrientedGraph, Tournament};

/// Kahn order that always removes the smallest available source.
/// Returns `None` when the graph has a directed cycle.
pub fn topological_order(g: &OrientedGraph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut indeg: Vec<u32> = (0..n).map(|v| g.in_mask(v).count_ones()).collect();
    let mut ready = 0u64;
    for (v, &d) in indeg.iter().enumerate() {
        if d == 0 {
            ready |= bit(v);
        }
    }
    let mut order = Vec::with_capacity(n);
    while ready != 0 {
        let v = ready.trailing_zeros() as usize;
        ready &= ready - 1;
        order.push(v);
        for w in bits(g.out_mask(v)) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready |= bit(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_acyclic(g: &OrientedGraph) -> bool {
    topological_order(g).is_some()
}

/// For each vertex, the number of vertices on a longest directed path starting there.
pub fn longest_path_from(g: &OrientedGraph) -> Result<Vec<usize>> {
    let order = topological_order(g).ok_or(Error::Cyclic)?;
    let mut len = vec![1usize; g.order()];
    for &v in order.iter().rev() {
        len[v] = 1 + bits(g.out_mask(v)).map(|w| len[w]).max().unwrap_or(0);
    }
    Ok(len)
}

/// `p(G)`: order of a longest directed path; 0 for the empty graph.
pub fn longest_path_order(g: &OrientedGraph) -> Result<usize> {
    Ok(longest_path_from(g)?.into_iter().max().unwrap_or(0))
}

/// Forward-reachability closure (each vertex reaches itself).
pub fn reachability(g: &OrientedGraph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut seen = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= g.out_mask(v);
                }
                frontier = next & !seen;
                seen |= next;
            }
            seen
        })
        .collect()
}

/// Strong components as vertex masks, in topological order of the condensation.
///
/// Components are sorted by the size of their forward closure (descending),
/// which is a topological order; incomparable components are ordered by their
/// least vertex.
pub fn strongly_connected_components(g: &OrientedGraph) -> Vec<u64> {
    let n = g.order();
    let reach = reachability(g);
    let mut assigned = 0u64;
    let mut comps: Vec<(u32, u64)> = Vec::new();
    for v in 0..n {
        if assigned & bit(v) != 0 {
            continue;
        }
        let comp = (0..n)
            .filter(|&w| reach[v] & bit(w) != 0 && reach[w] & bit(v) != 0)
            .fold(0u64, |m, w| m | bit(w));
        assigned |= comp;
        comps.push((reach[v].count_ones(), comp));
    }
    comps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.trailing_zeros().cmp(&b.1.trailing_zeros())));
    comps.into_iter().map(|(_, c)| c).collect()
}

pub fn is_strongly_connected(g: &OrientedGraph) -> bool {
    g.order() > 0 && reachability(g).iter().all(|&r| r == g.vertex_mask())
}

/// Hamiltonian path of a tournament, built by insertion.
pub fn hamiltonian_path(t: &Tournament) -> Vec<usize> {
    let n = t.order();
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for v in 0..n {
        if path.is_empty() || t.has_arc(v, path[0]) {
            path.insert(0, v);
        } else if t.has_arc(*path.last().unwrap(), v) {
            path.push(v);
        } else {
            // path[0] -> v and v -> path[last]: some consecutive pair switches.
            let i = (0..path.len() - 1)
                .find(|&i| t.has_arc(path[i], v) && t.has_arc(v, path[i + 1]))
                .expect("insertion point exists in a tournament");
            path.insert(i + 1, v);
        }
    }
    path
}

/// Checks that consecutive entries of `path` are arcs of `g`.
pub fn is_directed_path(g: &OrientedGraph, path: &[usize]) -> bool {
    path.windows(2).all(|w| g.has_arc(w[0], w[1]))
}

/// Number of directed triangles, `C(n,3) - Σ C(d+(v), 2)`.
pub fn count_c3(t: &Tournament) -> usize {
    let n = t.order();
    let choose2 = |d: usize| d * d.saturating_sub(1) / 2;
    let triples = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    triples - (0..n).map(|v| choose2(t.out_degree(v))).sum::<usize>()
}

/// Whether `v` lies on a directed triangle.
pub fn on_triangle(g: &OrientedGraph, v: usize) -> bool {
    bits(g.out_mask(v)).any(|w| g.out_mask(w) & g.in_mask(v) != 0)
}

/// Some directed triangle `v -> a -> b -> v`, least `(a, b)` first.
pub fn triangle_through(g: &OrientedGraph, v: usize) -> Option<(usize, usize)> {
    bits(g.out_mask(v)).find_map(|a| {
        let b = g.out_mask(a) & g.in_mask(v);
        (b != 0).then(|| (a, b.trailing_zeros() as usize))
    })
}
