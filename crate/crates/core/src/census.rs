//! Tournaments and oriented graphs up to isomorphism.
//!
//! The tournament census on `n` vertices is built from the census on `n - 1`
//! vertices: every member is extended by a new vertex in all `2^(n-1)` ways,
//! each extension is canonicalized, and the codes are sorted and deduplicated.
//! Members are stored as packed fixed-width codes and decoded on access.
//!
//! Censuses are memoized for the life of the process and cached on disk. The
//! cache directory is `$OGT_CACHE_DIR` (an empty value disables the disk
//! cache), falling back to the platform cache directory. A cache file holds an
//! 8-byte little-endian member count followed by the codes. Files that fail
//! validation are ignored and rewritten.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_code, CanonicalCode, CodeKind};
use crate::domination::all_k_subsets_dominated;
use crate::error::{Error, Result};
use crate::format::pairs;
use crate::graph::{bit, OrientedGraph, Tournament};
use crate::hom::contains_copy;
use crate::par;
use crate::structure::is_strongly_connected;

/// Largest tournament census produced on request.
pub const CENSUS_CAP: usize = 10;
/// Largest oriented-graph census (deduplicated).
pub const ORIENTED_CENSUS_CAP: usize = 5;
/// Largest labelled oriented-graph stream.
pub const ORIENTED_STREAM_CAP: usize = 6;

/// Number of tournaments up to isomorphism for `n = 0..=10`, used to validate
/// cache files before trusting them.
const KNOWN_TOURNAMENT_COUNTS: [u64; 11] = [1, 1, 1, 2, 4, 12, 56, 456, 6880, 191_536, 9_733_056];

/// All graphs of one kind and order up to isomorphism, sorted by code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    kind: CodeKind,
    n: usize,
    width: usize,
    data: Vec<u8>,
}

impl Census {
    fn from_keys(kind: CodeKind, n: usize, keys: &[u64]) -> Census {
        let width = CanonicalCode::width(kind, n);
        let mut data = Vec::with_capacity(keys.len() * width);
        for k in keys {
            data.extend_from_slice(&k.to_be_bytes()[..width]);
        }
        Census { kind, n, width, data }
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            // order 0 and 1 have a single empty code
            1
        } else {
            self.data.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn record(&self, i: usize) -> &[u8] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn code(&self, i: usize) -> CanonicalCode {
        CanonicalCode::from_parts(self.kind, self.n, self.record(i).to_vec())
    }

    pub fn member(&self, i: usize) -> OrientedGraph {
        self.code(i).to_graph().expect("census records are validated")
    }

    /// Member `i` as a tournament; panics for oriented-graph censuses.
    pub fn tournament(&self, i: usize) -> Tournament {
        Tournament::try_from(self.member(i)).expect("tournament census")
    }

    pub fn members(&self) -> impl Iterator<Item = OrientedGraph> + '_ {
        (0..self.len()).map(|i| self.member(i))
    }

    pub fn tournaments(&self) -> impl Iterator<Item = Tournament> + '_ {
        (0..self.len()).map(|i| self.tournament(i))
    }

    /// Position of the member with code `code`.
    pub fn index_of(&self, code: &CanonicalCode) -> Option<usize> {
        if code.kind() != self.kind || code.order() != self.n {
            return None;
        }
        let len = self.len();
        let (mut lo, mut hi) = (0, len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.record(mid).cmp(code.bytes()) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Serialized form: little-endian count, then the records.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = (self.len() as u64).to_le_bytes().to_vec();
        out.extend_from_slice(&self.data);
        out
    }

    /// Parses and validates a serialized census. Records must be strictly
    /// increasing and decode to graphs of the right kind; a sample of them is
    /// re-canonicalized.
    pub fn from_bytes(kind: CodeKind, n: usize, bytes: &[u8]) -> Result<Census> {
        let bad = |m: &str| Error::Parse(format!("census file for n={n}: {m}"));
        if bytes.len() < 8 {
            return Err(bad("truncated header"));
        }
        let count = u64::from_le_bytes(bytes[..8].try_into().unwrap());
        let width = CanonicalCode::width(kind, n);
        let body = &bytes[8..];
        let expected_len = if width == 0 { 0 } else { count as usize * width };
        if width == 0 && count != 1 {
            return Err(bad("wrong member count"));
        }
        if body.len() != expected_len {
            return Err(bad("length does not match count"));
        }
        if kind == CodeKind::Tournament && n < KNOWN_TOURNAMENT_COUNTS.len() && KNOWN_TOURNAMENT_COUNTS[n] != count {
            return Err(bad("unexpected member count"));
        }
        let census = Census {
            kind,
            n,
            width,
            data: body.to_vec(),
        };
        for i in 1..census.len() {
            if census.record(i - 1) >= census.record(i) {
                return Err(bad("records not strictly increasing"));
            }
        }
        let len = census.len();
        if len == 0 {
            return Err(bad("no members"));
        }
        let step = (len / 64).max(1);
        for i in (0..len).step_by(step).chain([len - 1]) {
            let code = census.code(i);
            let g = code.to_graph().map_err(|_| bad("undecodable record"))?;
            if canonical_code(&g)? != code {
                return Err(bad("record is not in canonical form"));
            }
        }
        Ok(census)
    }
}

fn key_of(code: &CanonicalCode) -> u64 {
    let mut buf = [0u8; 8];
    buf[..code.bytes().len()].copy_from_slice(code.bytes());
    u64::from_be_bytes(buf)
}

/// A canonical-code function used during generation.
pub type Canonizer = fn(&OrientedGraph) -> Result<CanonicalCode>;

/// Tournament census on `n` vertices from the census on `n - 1` vertices.
pub fn extend_census(prev: &Census, canon: Canonizer) -> Result<Census> {
    let m = prev.order();
    let n = m + 1;
    if n > CENSUS_CAP {
        return Err(cap_error(n));
    }
    let per_member: Vec<Result<Vec<u64>>> = par::map_range(prev.len(), |i| {
        let t = prev.member(i);
        let mut keys = Vec::with_capacity(1 << m);
        for pattern in 0u64..(1u64 << m) {
            // bit j of the pattern: arc j -> new vertex
            let mut rows: Vec<u64> = (0..m)
                .map(|j| t.out_mask(j) | if pattern & bit(j) != 0 { bit(m) } else { 0 })
                .collect();
            rows.push(!pattern & crate::graph::full_mask(m));
            let g = OrientedGraph::from_out_rows(rows)?;
            keys.push(key_of(&canon(&g)?));
        }
        keys.sort_unstable();
        keys.dedup();
        Ok(keys)
    });
    let mut keys = Vec::new();
    for k in per_member {
        keys.extend(k?);
    }
    keys.sort_unstable();
    keys.dedup();
    Ok(Census::from_keys(CodeKind::Tournament, n, &keys))
}

/// Builds the tournament census from scratch without any caching.
pub fn generate_tournaments(n: usize, canon: Canonizer) -> Result<Census> {
    if n > CENSUS_CAP {
        return Err(cap_error(n));
    }
    let mut census = base_census(0);
    for _ in 0..n {
        census = if census.order() == 0 { base_census(1) } else { extend_census(&census, canon)? };
    }
    Ok(census)
}

fn base_census(n: usize) -> Census {
    Census {
        kind: CodeKind::Tournament,
        n,
        width: 0,
        data: Vec::new(),
    }
}

fn cap_error(n: usize) -> Error {
    Error::CapExceeded {
        what: "tournament census order (n = 11 has about 2.2e9 classes, beyond desk scale)",
        value: n as u64,
        cap: CENSUS_CAP as u64,
    }
}

type Memo = Mutex<HashMap<(CodeKind, usize), Arc<Census>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Directory used for census files, if any.
pub fn cache_dir() -> Option<PathBuf> {
    match std::env::var_os("OGT_CACHE_DIR") {
        Some(v) if v.is_empty() => None,
        Some(v) => Some(PathBuf::from(v)),
        None => dirs::cache_dir().map(|d| d.join("ogt")),
    }
}

pub fn cache_file(dir: &Path, kind: CodeKind, n: usize) -> PathBuf {
    let prefix = match kind {
        CodeKind::Tournament => "tour",
        CodeKind::Oriented => "og",
    };
    dir.join(format!("{prefix}_{n}.census"))
}

fn load(dir: &Path, kind: CodeKind, n: usize) -> Option<Census> {
    let bytes = std::fs::read(cache_file(dir, kind, n)).ok()?;
    Census::from_bytes(kind, n, &bytes).ok()
}

/// Writes a census file atomically (temporary file, then rename).
pub fn store(dir: &Path, census: &Census) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let path = cache_file(dir, census.kind(), census.order());
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, census.to_bytes())?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}

/// Tournament census using an explicit cache directory (`None` for no disk cache).
pub fn tournaments_in(dir: Option<&Path>, n: usize) -> Result<Census> {
    if n > CENSUS_CAP {
        return Err(cap_error(n));
    }
    if n <= 1 {
        return Ok(base_census(n));
    }
    if let Some(c) = dir.and_then(|d| load(d, CodeKind::Tournament, n)) {
        return Ok(c);
    }
    let prev = tournaments_in(dir, n - 1)?;
    let census = extend_census(&prev, canonical_code)?;
    if let Some(d) = dir {
        // The cache is advisory; a failed write only costs time later.
        let _ = store(d, &census);
    }
    Ok(census)
}

/// All tournaments on `n` vertices up to isomorphism.
pub fn tournaments(n: usize) -> Result<Arc<Census>> {
    memoized(CodeKind::Tournament, n, || tournaments_in(cache_dir().as_deref(), n))
}

fn memoized(kind: CodeKind, n: usize, build: impl FnOnce() -> Result<Census>) -> Result<Arc<Census>> {
    if let Some(c) = memo().lock().unwrap().get(&(kind, n)) {
        return Ok(c.clone());
    }
    let census = Arc::new(build()?);
    memo().lock().unwrap().insert((kind, n), census.clone());
    Ok(census)
}

/// Census filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    StronglyConnected,
    /// No copy of the transitive tournament on this many vertices.
    TtFree(usize),
    /// Every subset of this size has a common in-neighbour.
    AllKSubsetsDominated(usize),
}

impl Predicate {
    pub fn holds(&self, t: &Tournament) -> bool {
        match *self {
            Predicate::StronglyConnected => is_strongly_connected(t),
            Predicate::TtFree(k) => {
                let tt = crate::construct::transitive_tournament(k).expect("k <= 64");
                contains_copy(t, &tt).is_none()
            }
            Predicate::AllKSubsetsDominated(k) => all_k_subsets_dominated(t, k),
        }
    }

    /// Parses `strongly_connected`, `tt_free(k)` or `all_k_subsets_dominated(k)`.
    pub fn parse(s: &str) -> Result<Predicate> {
        let s = s.trim();
        if s == "strongly_connected" {
            return Ok(Predicate::StronglyConnected);
        }
        let arg = |name: &str| -> Option<usize> {
            s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()
        };
        if let Some(k) = arg("tt_free") {
            return Ok(Predicate::TtFree(k));
        }
        if let Some(k) = arg("all_k_subsets_dominated") {
            return Ok(Predicate::AllKSubsetsDominated(k));
        }
        Err(Error::Parse(format!("unknown predicate {s:?}")))
    }
}

/// Census members satisfying `pred`, in census order.
pub fn tournaments_filtered(n: usize, pred: Predicate) -> Result<Vec<Tournament>> {
    tournaments_where(n, |t| pred.holds(t))
}

pub fn tournaments_where<F>(n: usize, pred: F) -> Result<Vec<Tournament>>
where
    F: Fn(&Tournament) -> bool + Sync + Send,
{
    let census = tournaments(n)?;
    let hits: Vec<Option<Tournament>> = par::map_range(census.len(), |i| {
        let t = census.tournament(i);
        pred(&t).then_some(t)
    });
    Ok(hits.into_iter().flatten().collect())
}

/// Number of labelled oriented graphs on `n` vertices, `3^C(n,2)`.
pub fn oriented_stream_len(n: usize) -> Result<u64> {
    if n > ORIENTED_STREAM_CAP {
        return Err(Error::CapExceeded {
            what: "labelled oriented-graph stream order",
            value: n as u64,
            cap: ORIENTED_STREAM_CAP as u64,
        });
    }
    Ok(3u64.pow(pairs(n) as u32))
}

/// Labelled oriented graph number `index` of the stream.
///
/// Pairs `i < j` are taken in lexicographic order, the first pair being the
/// least significant base-3 digit; digit 0 means no arc, 1 means `i -> j`
/// and 2 means `j -> i`.
pub fn oriented_from_index(n: usize, index: u64) -> OrientedGraph {
    let mut rows = vec![0u64; n];
    let mut x = index;
    for i in 0..n {
        for j in i + 1..n {
            match x % 3 {
                1 => rows[i] |= bit(j),
                2 => rows[j] |= bit(i),
                _ => {}
            }
            x /= 3;
        }
    }
    OrientedGraph::from_out_rows(rows).expect("valid by construction")
}

/// Every labelled oriented graph on `n` vertices, in stream order.
pub fn oriented_stream(n: usize) -> Result<impl Iterator<Item = OrientedGraph>> {
    let len = oriented_stream_len(n)?;
    Ok((0..len).map(move |i| oriented_from_index(n, i)))
}

/// All oriented graphs on `n` vertices up to isomorphism.
pub fn oriented_graphs(n: usize) -> Result<Arc<Census>> {
    if n > ORIENTED_CENSUS_CAP {
        return Err(Error::CapExceeded {
            what: "oriented-graph census order",
            value: n as u64,
            cap: ORIENTED_CENSUS_CAP as u64,
        });
    }
    memoized(CodeKind::Oriented, n, || {
        let len = oriented_stream_len(n)? as usize;
        let codes: Vec<Result<CanonicalCode>> =
            par::map_range(len, |i| canonical_code(&oriented_from_index(n, i as u64)));
        let mut keys = Vec::with_capacity(len);
        for c in codes {
            let c = c?;
            // tournaments get tournament codes; re-encode as full matrices
            let c = if c.kind() == CodeKind::Oriented {
                c
            } else {
                oriented_matrix_code(&c.to_graph()?)?
            };
            keys.push(key_of(&c));
        }
        keys.sort_unstable();
        keys.dedup();
        Ok(Census::from_keys(CodeKind::Oriented, n, &keys))
    })
}

/// Full-matrix code for any graph: the least matrix code among the orderings
/// searched for its canonical form.
fn oriented_matrix_code(g: &OrientedGraph) -> Result<CanonicalCode> {
    let (_, ord) = crate::canon::canonical_form(g)?;
    let n = g.order();
    let bytes = crate::format::pack_bits(
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.has_arc(ord[i], ord[j])),
    );
    Ok(CanonicalCode::from_parts(CodeKind::Oriented, n, bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| tournaments(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12, 56, 456]);
    }

    #[test]
    fn three_vertices() {
        let c = tournaments(3).unwrap();
        let members: Vec<Tournament> = c.tournaments().collect();
        let tt3 = canonical_code(&transitive_tournament(3).unwrap()).unwrap();
        let c3 = canonical_code(&directed_cycle(3).unwrap()).unwrap();
        assert!(c.index_of(&tt3).is_some());
        assert!(c.index_of(&c3).is_some());
        assert_eq!(members.len(), 2);
    }

    #[test]
    fn serialization_round_trip_and_corruption() {
        let c = tournaments_in(None, 6).unwrap();
        let bytes = c.to_bytes();
        assert_eq!(Census::from_bytes(CodeKind::Tournament, 6, &bytes).unwrap(), c);
        let mut swapped = bytes.clone();
        let w = CanonicalCode::width(CodeKind::Tournament, 6);
        for k in 0..w {
            swapped.swap(8 + k, 8 + w + k);
        }
        assert!(Census::from_bytes(CodeKind::Tournament, 6, &swapped).is_err());
        assert!(Census::from_bytes(CodeKind::Tournament, 6, &bytes[..bytes.len() - 1]).is_err());
    }

    #[test]
    fn disk_cache_regenerates_corrupt_files() {
        let dir = tempfile::tempdir().unwrap();
        let fresh = tournaments_in(Some(dir.path()), 5).unwrap();
        let path = cache_file(dir.path(), CodeKind::Tournament, 5);
        assert!(path.exists());
        std::fs::write(&path, b"garbage").unwrap();
        assert_eq!(tournaments_in(Some(dir.path()), 5).unwrap(), fresh);
        assert_eq!(
            Census::from_bytes(CodeKind::Tournament, 5, &std::fs::read(&path).unwrap()).unwrap(),
            fresh
        );
    }

    #[test]
    fn oriented_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| oriented_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 42]);
        assert_eq!(oriented_stream(3).unwrap().count(), 27);
        assert!(oriented_graphs(6).unwrap_err().is_cap());
    }

    #[test]
    fn caps() {
        assert!(tournaments(11).unwrap_err().is_cap());
    }

    #[test]
    fn predicates() {
        assert_eq!(tournaments_filtered(5, Predicate::StronglyConnected).unwrap().len(), 6);
        assert!(tournaments_filtered(4, Predicate::TtFree(3)).unwrap().is_empty());
        assert_eq!(Predicate::parse("tt_free(4)").unwrap(), Predicate::TtFree(4));
        assert!(Predicate::parse("tt_free").is_err());
    }
}
