//! Dominated sets, domination graphs and their structure.
//!
//! A set `X` is dominated when some vertex has all of `X` among its
//! out-neighbours. The domination graph of a tournament keeps exactly the
//! arcs whose two endpoints are not dominated together.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::construct::power_cycle;
use crate::graph::{bit, bits, Arc, OrientedGraph, Tournament};
use crate::hom::contains_copy;
use crate::par;
use crate::random::{random_tournament, stream_rng};
use crate::structure::{longest_path_from, strongly_connected_components};

/// Least vertex whose out-neighbourhood contains `x`.
pub fn is_dominated(t: &OrientedGraph, x: u64) -> Option<usize> {
    (0..t.order()).find(|&v| t.out_mask(v) & x == x)
}

/// The lexicographically first `k`-subset with no dominating vertex.
pub fn first_undominated_subset(t: &OrientedGraph, k: usize) -> Option<Vec<usize>> {
    let n = t.order();
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    undominated_dfs(t, k, 0, t.vertex_mask(), &mut chosen).then_some(chosen)
}

/// Depth-first search over subsets in lexicographic order; `cand` holds the
/// vertices dominating everything chosen so far.
fn undominated_dfs(t: &OrientedGraph, k: usize, start: usize, cand: u64, chosen: &mut Vec<usize>) -> bool {
    let n = t.order();
    if cand == 0 {
        // every completion fails; take the smallest one
        let need = k - chosen.len();
        if n - start < need {
            return false;
        }
        chosen.extend(start..start + need);
        return true;
    }
    if chosen.len() == k {
        return false;
    }
    for v in start..n {
        if n - v < k - chosen.len() {
            break;
        }
        chosen.push(v);
        if undominated_dfs(t, k, v + 1, cand & t.in_mask(v), chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether every `k`-subset of vertices is dominated.
pub fn all_k_subsets_dominated(t: &OrientedGraph, k: usize) -> bool {
    first_undominated_subset(t, k).is_none()
}

/// Spanning subgraph of the undominated arcs.
pub fn domination_graph(t: &Tournament) -> OrientedGraph {
    let arcs = t
        .arcs()
        .filter(|a| t.in_mask(a.source) & t.in_mask(a.target) == 0)
        .collect::<Vec<Arc>>();
    OrientedGraph::from_arcs(t.order(), arcs).expect("subgraph of a valid graph")
}

/// Structure of a domination graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominationClassification {
    /// An odd directed cycle, arcs leaving it to pendant vertices, and isolated vertices.
    OddCycle {
        cycle: Vec<usize>,
        pendants: Vec<Arc>,
        isolated: Vec<usize>,
    },
    /// Each component with arcs is a directed path (its spine) plus pendant
    /// arcs leaving spine vertices.
    CaterpillarForest { spines: Vec<Vec<usize>>, isolated: Vec<usize> },
    Other,
}

impl DominationClassification {
    pub fn shape(&self) -> &'static str {
        match self {
            DominationClassification::OddCycle { .. } => "odd_cycle",
            DominationClassification::CaterpillarForest { .. } => "caterpillar_forest",
            DominationClassification::Other => "other",
        }
    }

    /// Cycle length, or the vertex counts of the caterpillar spines.
    pub fn details(&self) -> Vec<usize> {
        match self {
            DominationClassification::OddCycle { cycle, .. } => vec![cycle.len()],
            DominationClassification::CaterpillarForest { spines, .. } => spines.iter().map(Vec::len).collect(),
            DominationClassification::Other => Vec::new(),
        }
    }
}

fn weak_components(g: &OrientedGraph) -> Vec<u64> {
    let mut seen = 0u64;
    let mut comps = Vec::new();
    for v in 0..g.order() {
        if seen & bit(v) != 0 {
            continue;
        }
        let mut comp = bit(v);
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |m, u| m | g.out_mask(u) | g.in_mask(u)) & !comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push(comp);
    }
    comps
}

/// Classifies a domination graph, choosing each caterpillar spine as the
/// lexicographically least longest path of its component.
pub fn classify_domination(dom: &OrientedGraph) -> DominationClassification {
    classify_with(dom, &mut |options: &[usize]| options[0])
}

/// Same classification with spines chosen at random among longest paths.
pub fn classify_domination_randomized<R: Rng>(dom: &OrientedGraph, rng: &mut R) -> DominationClassification {
    classify_with(dom, &mut |options: &[usize]| *options.choose(rng).expect("nonempty"))
}

fn classify_with(dom: &OrientedGraph, pick: &mut dyn FnMut(&[usize]) -> usize) -> DominationClassification {
    let n = dom.order();
    let isolated: Vec<usize> = (0..n).filter(|&v| dom.out_mask(v) | dom.in_mask(v) == 0).collect();
    let cyclic: Vec<u64> = strongly_connected_components(dom)
        .into_iter()
        .filter(|c| c.count_ones() > 1)
        .collect();
    match cyclic.as_slice() {
        [] => classify_forest(dom, isolated, pick),
        [c] => classify_cycle(dom, *c, isolated),
        _ => DominationClassification::Other,
    }
}

fn classify_cycle(dom: &OrientedGraph, c: u64, isolated: Vec<usize>) -> DominationClassification {
    let len = c.count_ones() as usize;
    if len % 2 == 0 || bits(c).any(|v| (dom.out_mask(v) & c).count_ones() != 1 || (dom.in_mask(v) & c).count_ones() != 1) {
        return DominationClassification::Other;
    }
    let start = c.trailing_zeros() as usize;
    let mut cycle = vec![start];
    loop {
        let next = (dom.out_mask(*cycle.last().unwrap()) & c).trailing_zeros() as usize;
        if next == start {
            break;
        }
        cycle.push(next);
    }
    let mut pendants = Vec::new();
    for v in 0..dom.order() {
        if c & bit(v) != 0 || isolated.contains(&v) {
            continue;
        }
        let inn = dom.in_mask(v);
        if dom.out_mask(v) != 0 || inn.count_ones() != 1 || inn & c == 0 {
            return DominationClassification::Other;
        }
        pendants.push(Arc::new(inn.trailing_zeros() as usize, v));
    }
    DominationClassification::OddCycle { cycle, pendants, isolated }
}

fn classify_forest(
    dom: &OrientedGraph,
    isolated: Vec<usize>,
    pick: &mut dyn FnMut(&[usize]) -> usize,
) -> DominationClassification {
    let len = longest_path_from(dom).expect("acyclic by the component check");
    let mut spines = Vec::new();
    for comp in weak_components(dom) {
        if comp.count_ones() == 1 {
            continue;
        }
        let best = bits(comp).map(|v| len[v]).max().unwrap();
        let starts: Vec<usize> = bits(comp).filter(|&v| len[v] == best).collect();
        let mut spine = vec![pick(&starts)];
        while len[*spine.last().unwrap()] > 1 {
            let v = *spine.last().unwrap();
            let nexts: Vec<usize> = bits(dom.out_mask(v)).filter(|&w| len[w] == len[v] - 1).collect();
            spine.push(pick(&nexts));
        }
        let on_spine = spine.iter().fold(0u64, |m, &v| m | bit(v));
        let spine_arcs: usize = spine.iter().map(|&v| (dom.out_mask(v) & on_spine).count_ones() as usize).sum();
        if spine_arcs != spine.len() - 1 {
            return DominationClassification::Other;
        }
        for v in bits(comp & !on_spine) {
            let inn = dom.in_mask(v);
            if dom.out_mask(v) != 0 || inn.count_ones() != 1 || inn & on_spine == 0 {
                return DominationClassification::Other;
            }
        }
        spines.push(spine);
    }
    DominationClassification::CaterpillarForest { spines, isolated }
}

fn dom_arcs(dom: &OrientedGraph) -> Vec<Arc> {
    dom.arcs().collect()
}

/// For every two vertex-disjoint undominated arcs `vw`, `v'w'`, the four arcs
/// between them form one of the two directed 4-cycles `v v' w w'` or
/// `v w' w v'`.
pub fn check_disjoint_arc_dichotomy(t: &Tournament) -> bool {
    let arcs = dom_arcs(&domination_graph(t));
    arcs.iter().enumerate().all(|(i, a)| {
        arcs[i + 1..].iter().all(|b| {
            let (v, w, v2, w2) = (a.source, a.target, b.source, b.target);
            if v == v2 || v == w2 || w == v2 || w == w2 {
                return true;
            }
            let first = t.has_arc(v, v2) && t.has_arc(v2, w) && t.has_arc(w, w2) && t.has_arc(w2, v);
            let second = t.has_arc(v, w2) && t.has_arc(w2, w) && t.has_arc(w, v2) && t.has_arc(v2, v);
            first || second
        })
    })
}

/// Two vertex-disjoint undominated arcs whose sources are not joined by an
/// undominated arc, if any.
pub fn forcing_premise(t: &Tournament) -> Option<(Arc, Arc)> {
    let dom = domination_graph(t);
    let arcs = dom_arcs(&dom);
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            let disjoint = a.source != b.source && a.source != b.target && a.target != b.source && a.target != b.target;
            if disjoint && !dom.adjacent(a.source, b.source) {
                return Some((*a, *b));
            }
        }
    }
    None
}

/// If [`forcing_premise`] holds then the tournament contains the fifth power
/// cycle `C_5^(3)`. Returns whether the implication holds.
pub fn check_c53_forcing(t: &Tournament) -> bool {
    if forcing_premise(t).is_none() {
        return true;
    }
    let c53 = power_cycle(5, 3).expect("valid parameters");
    contains_copy(t, &c53).is_some()
}

/// `C(n,k) (1 - 2^-k)^(n-k)`: the union bound on the probability that a
/// uniformly random `n`-vertex tournament has an undominated `k`-set.
/// Evaluated in log space.
pub fn domination_failure_bound(n: usize, k: usize) -> crate::error::Result<f64> {
    if k < 1 || n <= k {
        return Err(crate::error::Error::InvalidParameter(format!("need n > k >= 1, got n={n}, k={k}")));
    }
    let ln_binom: f64 = (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum();
    let ln_miss = (1.0 - 0.5f64.powi(k as i32)).ln();
    Ok((ln_binom + (n - k) as f64 * ln_miss).exp())
}

/// Random search for a tournament on `n` vertices whose `k`-subsets are all
/// dominated. Trial `i` draws from stream `i` of `seed`; the least successful
/// trial wins, so the result does not depend on scheduling.
pub fn find_k_dominated_tournament(k: usize, n: usize, trials: u64, seed: u64) -> Option<(Tournament, u64)> {
    if n > crate::graph::MAX_VERTICES {
        return None;
    }
    let draw = |i: u64| random_tournament(n, &mut stream_rng(seed, i));
    let hit = par::find_first_index(trials as usize, |i| all_k_subsets_dominated(&draw(i as u64), k))?;
    let t = draw(hit as u64);
    assert!(all_k_subsets_dominated(&t, k));
    Some((t, hit as u64))
}
