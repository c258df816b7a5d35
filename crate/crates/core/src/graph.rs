//! Oriented graphs and tournaments on at most 64 vertices.
//!
//! Every vertex owns one machine word of out-neighbours and one of
//! in-neighbours, so neighbourhood queries are single mask operations.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest vertex count representable by a single `u64` row.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the indices of the set bits of `mask` in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A directed arc `source -> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
}

impl Arc {
    pub fn new(source: usize, target: usize) -> Self {
        Arc { source, target }
    }
}

impl From<(usize, usize)> for Arc {
    fn from((source, target): (usize, usize)) -> Self {
        Arc { source, target }
    }
}

/// Loop-free antisymmetric digraph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl OrientedGraph {
    /// Graph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(OrientedGraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    /// Builds a graph containing exactly `arcs`.
    ///
    /// Repeated arcs are merged; an arc together with its reverse is rejected.
    pub fn from_arcs<I, A>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: Into<Arc>,
    {
        let mut g = Self::empty(n)?;
        for a in arcs {
            let a = a.into();
            g.try_add_arc(a.source, a.target)?;
        }
        Ok(g)
    }

    /// Builds a graph from out-neighbour masks, validating every invariant.
    pub fn from_out_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        let mask = full_mask(n);
        let mut inn = vec![0u64; n];
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            for v in bits(row) {
                inn[v] |= bit(u);
            }
        }
        for u in 0..n {
            let both = rows[u] & inn[u];
            if both != 0 {
                return Err(Error::Antisymmetry(u, both.trailing_zeros() as usize));
            }
        }
        Ok(OrientedGraph { n, out: rows, inn })
    }

    pub(crate) fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.out[v] & bit(u) != 0 {
            return Err(Error::Antisymmetry(u, v));
        }
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
        Ok(())
    }

    /// Reverses the arc between `u` and `v` if one exists.
    pub(crate) fn reverse_pair(&mut self, u: usize, v: usize) {
        if self.has_arc(u, v) {
            self.out[u] &= !bit(v);
            self.inn[v] &= !bit(u);
            self.out[v] |= bit(u);
            self.inn[u] |= bit(v);
        } else if self.has_arc(v, u) {
            self.reverse_pair(v, u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.out[u] | self.inn[u]) & bit(v) != 0
    }

    /// Out-neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// In-neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    #[inline]
    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic `(source, target)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| Arc::new(u, v)))
    }

    pub fn is_tournament(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|v| (self.out[v] | self.inn[v] | bit(v)) == all)
    }

    /// All arcs reversed.
    pub fn reverse(&self) -> OrientedGraph {
        OrientedGraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Subgraph induced by `vertices`, renumbered in ascending vertex order.
    pub fn induced(&self, vertices: u64) -> OrientedGraph {
        let keep: Vec<usize> = bits(vertices & self.vertex_mask()).collect();
        self.induced_ordered(&keep)
    }

    /// Subgraph induced by `vertices`, vertex `i` of the result being `vertices[i]`.
    pub fn induced_ordered(&self, vertices: &[usize]) -> OrientedGraph {
        let k = vertices.len();
        let mut out = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_arc(u, v) {
                    out[i] |= bit(j);
                }
            }
        }
        let mut inn = vec![0u64; k];
        for (i, &row) in out.iter().enumerate() {
            for j in bits(row) {
                inn[j] |= bit(i);
            }
        }
        OrientedGraph { n: k, out, inn }
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<OrientedGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut out = vec![0u64; self.n];
        let mut inn = vec![0u64; self.n];
        for a in self.arcs() {
            out[perm[a.source]] |= bit(perm[a.target]);
            inn[perm[a.target]] |= bit(perm[a.source]);
        }
        Ok(OrientedGraph { n: self.n, out, inn })
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph({}; ", self.n)?;
        let mut first = true;
        for a in self.arcs() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}>{}", a.source, a.target)?;
        }
        f.write_str(")")
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// An oriented graph in which every pair of vertices carries exactly one arc.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament(OrientedGraph);

impl Tournament {
    pub fn into_inner(self) -> OrientedGraph {
        self.0
    }

    pub fn as_graph(&self) -> &OrientedGraph {
        &self.0
    }

    /// Builds a tournament from the upper-triangle orientation bits:
    /// `arc_up(i, j)` (for `i < j`) is true iff the arc is `i -> j`.
    pub fn from_fn(n: usize, mut arc_up: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = OrientedGraph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                if arc_up(i, j) {
                    g.try_add_arc(i, j)?;
                } else {
                    g.try_add_arc(j, i)?;
                }
            }
        }
        Ok(Tournament(g))
    }

    /// Reverses the arc between `u` and `v`.
    pub fn reverse_arc(&self, u: usize, v: usize) -> Result<Tournament> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.0.clone();
        g.reverse_pair(u, v);
        Ok(Tournament(g))
    }

    pub fn reverse(&self) -> Tournament {
        Tournament(self.0.reverse())
    }

    pub fn induced(&self, vertices: u64) -> Tournament {
        Tournament(self.0.induced(vertices))
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        self.0.relabel(perm).map(Tournament)
    }
}

impl TryFrom<OrientedGraph> for Tournament {
    type Error = Error;

    fn try_from(g: OrientedGraph) -> Result<Self> {
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                if !g.adjacent(u, v) {
                    return Err(Error::NotTournament(u, v));
                }
            }
        }
        Ok(Tournament(g))
    }
}

impl Deref for Tournament {
    type Target = OrientedGraph;

    fn deref(&self) -> &OrientedGraph {
        &self.0
    }
}

impl AsRef<OrientedGraph> for Tournament {
    fn as_ref(&self) -> &OrientedGraph {
        &self.0
    }
}

impl AsRef<OrientedGraph> for OrientedGraph {
    fn as_ref(&self) -> &OrientedGraph {
        self
    }
}

impl From<Tournament> for OrientedGraph {
    fn from(t: Tournament) -> Self {
        t.0
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({:?})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_triangle_from_arcs() {
        let g = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.arc_count(), 3);
        assert!(g.is_tournament());
        assert!(g.has_arc(2, 0));
    }

    #[test]
    fn digon_rejected() {
        assert_eq!(
            OrientedGraph::from_arcs(2, [(0, 1), (1, 0)]),
            Err(Error::Antisymmetry(1, 0))
        );
    }

    #[test]
    fn empty_graph() {
        let g = OrientedGraph::from_arcs(0, Vec::<Arc>::new()).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            OrientedGraph::from_arcs(2, [(0, 0)]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            OrientedGraph::from_arcs(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(matches!(
            OrientedGraph::empty(65),
            Err(Error::TooLarge { n: 65, .. })
        ));
        assert!(OrientedGraph::empty(64).is_ok());
        assert_eq!(
            OrientedGraph::from_out_rows(vec![0b10, 0b01]),
            Err(Error::Antisymmetry(0, 1))
        );
    }

    #[test]
    fn repeated_arc_is_merged() {
        let g = OrientedGraph::from_arcs(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn induced_keeps_relative_order() {
        let g = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let h = g.induced(0b1101);
        assert_eq!(h.order(), 3);
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![Arc::new(0, 2), Arc::new(1, 2)]);
    }

    #[test]
    fn tournament_requires_completeness() {
        let g = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(Tournament::try_from(g), Err(Error::NotTournament(0, 2)));
    }
}
