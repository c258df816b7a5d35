//! Named machine checks of the finite statements about compressibility,
//! domination and layered graphs. Each check returns a [`CheckReport`]; a
//! failed report carries the graph that broke it.
//!
//! Statements that are asymptotic are instantiated at the largest scale that
//! runs in seconds to minutes, and the report records that scale. They are
//! consistency checks, not proofs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::{are_isomorphic, canonical_code, canonical_graph};
use crate::census::{tournaments, tournaments_filtered, Predicate};
use crate::construct::{
    arrow_join, composition, directed_cycle, directed_path, knn_orientation, power_cycle, power_path, rotational_11,
    special_t, tilde_t7, transitive_tournament, SpecialTournament,
};
use crate::domination::{
    all_k_subsets_dominated, check_c53_forcing, check_disjoint_arc_dichotomy, classify_domination,
    domination_graph, first_undominated_subset, is_dominated, DominationClassification,
};
use crate::error::{Error, Result};
use crate::format::{to_digraph6, to_hex};
use crate::graph::{bit, OrientedGraph, Tournament};
use crate::hom::{contains_copy, embed_via_domination, hom_exists, hom_exists_pinned, Homomorphism};
use crate::layered::{
    find_gadget_pair, gadget_pair_for, glued_paths, layer_typing, q_gadget, q_hom_from_gadget, q_terminals,
    reduce_and_map_q, subdivide,
};
use crate::par;
use crate::random::{random_dk, random_tournament, stream_rng, DEFAULT_SEED};
use crate::structure::{is_acyclic, is_strongly_connected, longest_path_order};
use crate::tau::{build_universal_dk, tau, tau_family, CompressibilityResult};

/// Every check, in the order [`run_all`] runs them.
pub const CHECK_IDS: &[&str] = &[
    "check_example_paths",
    "check_example_family",
    "check_squares",
    "check_ell3",
    "check_ell_ge4",
    "check_claim_5v",
    "check_claim_6v",
    "check_claim_q",
    "check_layered_small",
    "check_draganic_k2",
    "check_domination_pack",
    "check_section5",
    "check_prop26",
];

/// A graph, optionally with a map into another graph, in both text formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    /// `n:HEX`, for tournaments only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hex: Option<String>,
    pub digraph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
}

impl Witness {
    pub fn graph(label: impl Into<String>, g: &OrientedGraph) -> Self {
        Witness {
            label: label.into(),
            hex: Tournament::try_from(g.clone()).ok().map(|t| to_hex(&t)),
            digraph6: to_digraph6(g),
            map: None,
        }
    }

    pub fn with_map(mut self, hom: &Homomorphism) -> Self {
        self.map = Some(hom.map().to_vec());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub passed: bool,
    pub scale: BTreeMap<String, String>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub runtime_ms: u64,
}

/// `key=value` scale parameters; unknown keys are ignored by the checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Scale(BTreeMap<String, String>);

impl Scale {
    pub fn parse<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Scale> {
        let mut map = BTreeMap::new();
        for item in items {
            for part in item.split(',').filter(|p| !p.is_empty()) {
                let (k, v) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("scale item {part:?} is not key=value")))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        Ok(Scale(map))
    }

    pub fn set(mut self, key: &str, value: impl ToString) -> Scale {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    fn usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::Parse(format!("scale {key}={v:?} is not a number"))),
        }
    }
}

/// Accumulates the outcome of one check.
struct Report {
    id: &'static str,
    passed: bool,
    scale: BTreeMap<String, String>,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl Report {
    fn new(id: &'static str) -> Self {
        Report {
            id,
            passed: true,
            scale: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn scale(&mut self, key: &str, value: impl ToString) {
        self.scale.insert(key.to_string(), value.to_string());
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Records a failure with the graph responsible.
    fn fail(&mut self, msg: impl Into<String>, w: Witness) {
        self.passed = false;
        self.notes.push(format!("FAIL: {}", msg.into()));
        self.witnesses.push(w);
    }

    fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    fn finish(self, runtime_ms: u64) -> CheckReport {
        CheckReport {
            check_id: self.id.to_string(),
            passed: self.passed,
            scale: self.scale,
            witnesses: self.witnesses,
            notes: self.notes,
            runtime_ms,
        }
    }
}

#[cfg(not(target_arch = "wasm32"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

#[cfg(target_arch = "wasm32")]
fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    (f(), 0)
}

/// Runs one check by id.
pub fn run_check(id: &str, scale: &Scale, seed: u64) -> Result<CheckReport> {
    let id: &'static str = CHECK_IDS
        .iter()
        .find(|&&c| c == id)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown check {id:?}")))?;
    let (report, ms) = timed(|| -> Result<Report> {
        let mut r = Report::new(id);
        match id {
            "check_example_paths" => example_paths(&mut r, scale.usize("kmax", 7)?)?,
            "check_example_family" => example_family(&mut r, scale.usize("k", 3)?)?,
            "check_squares" => squares(&mut r, scale.usize("kmax", 6)?)?,
            "check_ell3" => ell3(&mut r, scale.usize("kmax", 7)?)?,
            "check_ell_ge4" => ell_ge4(&mut r, scale.usize("kmax", 8)?)?,
            "check_claim_5v" => claim_5v(&mut r)?,
            "check_claim_6v" => claim_6v(&mut r)?,
            "check_claim_q" => claim_q(&mut r, scale.usize("lmin", 3)?, scale.usize("lmax", 5)?)?,
            "check_layered_small" => layered_small(&mut r)?,
            "check_draganic_k2" => draganic_k2(&mut r, scale.usize("nmax", 7)?)?,
            "check_domination_pack" => domination_pack(
                &mut r,
                scale.usize("nmax", 7)?,
                scale.usize("random", 500)?,
                scale.usize("embed", 100)?,
                seed,
            )?,
            "check_section5" => section5(&mut r, scale.usize("samples", 50)?, seed)?,
            "check_prop26" => prop26(&mut r, scale.usize("nmax", 3)?)?,
            _ => unreachable!("id validated above"),
        }
        Ok(r)
    });
    let mut report = report?;
    report.scale("seed", seed);
    Ok(report.finish(ms))
}

/// Runs every check with the given scale.
pub fn run_all(scale: &Scale, seed: u64) -> Result<Vec<CheckReport>> {
    CHECK_IDS.iter().map(|id| run_check(id, scale, seed)).collect()
}

pub fn run_default(id: &str) -> Result<CheckReport> {
    run_check(id, &Scale::default(), DEFAULT_SEED)
}

/// Sweeps `τ(H)` up to `expected` and compares.
fn expect_tau(r: &mut Report, label: &str, h: &OrientedGraph, expected: usize) -> Result<CompressibilityResult> {
    let res = tau(h, expected)?;
    if res.is_exact() && res.tau == expected {
        r.note(format!("tau({label}) = {expected}, {} tournaments verified", res.verified_at_tau));
    } else {
        let (level, w) = res.witnesses.iter().next_back().expect("a level below the cap failed");
        r.fail(
            format!("tau({label}) exceeds {expected}; level {level} witness"),
            Witness::graph(format!("{label} no-hom level {level}"), w),
        );
    }
    Ok(res)
}

fn example_paths(r: &mut Report, kmax: usize) -> Result<()> {
    r.scale("kmax", kmax);
    for k in 1..=kmax {
        expect_tau(r, &format!("P_{k}"), &directed_path(k)?, k)?;
    }
    Ok(())
}

fn example_family(r: &mut Report, k: usize) -> Result<()> {
    r.scale("k", k);
    if k < 1 || 1usize << k > crate::graph::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("family check needs 1 <= k <= 6, got {k}")));
    }
    let family = [directed_path(1 << k)?, transitive_tournament(k)?.into_inner()];
    let res = tau_family(&family, k)?;
    if res.is_exact() && res.tau == k {
        r.note(format!("tau({{P_{}, TT_{k}}}) = {k}", 1 << k));
    } else {
        r.fail(
            format!("family compressibility is not {k}"),
            Witness::graph("level witness", &res.witnesses[&k]),
        );
    }
    Ok(())
}

/// Tournament on `⌊(3k-1)/2⌋ - 1` vertices receiving no `P_k^(2)`.
pub fn square_lower_witness(k: usize) -> Result<OrientedGraph> {
    if k < 2 {
        return Err(Error::InvalidParameter("square paths need k >= 2".into()));
    }
    // a transitive skeleton keeps the witness a tournament; it agrees with the
    // path skeleton for up to two blobs
    if k % 2 == 1 {
        composition(&*transitive_tournament((k - 1) / 2)?, &directed_cycle(3)?)
    } else if k == 2 {
        Ok(transitive_tournament(1)?.into_inner())
    } else {
        let rest = composition(&*transitive_tournament(k / 2 - 1)?, &directed_cycle(3)?)?;
        arrow_join(&*transitive_tournament(1)?, &rest)
    }
}

fn squares(r: &mut Report, kmax: usize) -> Result<()> {
    r.scale("kmax", kmax);
    for k in 3..=kmax {
        let expected = (3 * k - 1) / 2;
        let h = power_path(k, 2)?;
        let w = square_lower_witness(k)?;
        if w.order() != expected - 1 || !w.is_tournament() {
            r.fail(format!("lower witness for k={k} has the wrong shape"), Witness::graph("witness", &w));
        }
        match hom_exists(&h, &w) {
            None => r.witness(Witness::graph(format!("no P_{k}^(2) -> this"), &w)),
            Some(m) => r.fail(
                format!("P_{k}^(2) maps into its lower witness"),
                Witness::graph("witness", &w).with_map(&m),
            ),
        }
        expect_tau(r, &format!("P_{k}^(2)"), &h, expected)?;
    }
    Ok(())
}

fn ell3(r: &mut Report, kmax: usize) -> Result<()> {
    r.scale("kmax", kmax);
    let h7 = power_path(7, 3)?;
    let tt = tilde_t7();
    match hom_exists(&h7, &tt) {
        None => {
            r.note("no P_7^(3) -> tilde T_7, so tau(P_7^(3)) >= 8");
            r.witness(Witness::graph("tilde T_7", &tt));
        }
        Some(m) => r.fail("P_7^(3) maps into tilde T_7", Witness::graph("tilde T_7", &tt).with_map(&m)),
    }
    for k in 4..=kmax {
        let h = power_path(k, 3)?;
        let (lo, hi) = ((7 * k - 1) / 6, 3 * k);
        let res = tau(&h, crate::census::CENSUS_CAP.min(9))?;
        if res.is_exact() && lo <= res.tau && res.tau <= hi {
            r.note(format!("tau(P_{k}^(3)) = {} within [{lo}, {hi}]", res.tau));
        } else if !res.is_exact() {
            r.note(format!("tau(P_{k}^(3)) >= {} (sweep cap)", res.tau));
        } else {
            r.fail(
                format!("tau(P_{k}^(3)) = {} outside [{lo}, {hi}]", res.tau),
                Witness::graph(format!("P_{k}^(3)"), &h),
            );
        }
    }
    Ok(())
}

fn ell_ge4(r: &mut Report, kmax: usize) -> Result<()> {
    r.scale("kmax", kmax);
    for (k, ell) in [(5, 4), (6, 4), (6, 5), (7, 5), (7, 4), (8, 4)] {
        if k <= kmax {
            expect_tau(r, &format!("P_{k}^({ell})"), &power_path(k, ell)?, k)?;
        }
    }
    Ok(())
}

/// `T_a .. T_e` as graphs.
pub fn special_family() -> Vec<(&'static str, OrientedGraph)> {
    SpecialTournament::ALL
        .iter()
        .map(|&w| (w.name(), special_t(w).into_inner()))
        .collect()
}

fn claim_5v(r: &mut Report) -> Result<()> {
    let strong = tournaments_filtered(5, Predicate::StronglyConnected)?;
    let mut named = vec![("C_5^(2)", power_cycle(5, 2)?)];
    named.extend(special_family());
    r.note(format!("{} strongly connected 5-vertex classes", strong.len()));
    if strong.len() != named.len() {
        r.passed = false;
        r.note(format!("FAIL: expected {} classes", named.len()));
    }
    let mut codes = Vec::new();
    for (name, g) in &named {
        if !is_strongly_connected(g) {
            r.fail(format!("{name} is not strongly connected"), Witness::graph(*name, g));
        }
        codes.push(canonical_code(g)?);
    }
    for i in 0..named.len() {
        for j in i + 1..named.len() {
            if codes[i] == codes[j] {
                r.fail(format!("{} and {} are isomorphic", named[i].0, named[j].0), Witness::graph(named[i].0, &named[i].1));
            }
        }
    }
    for t in &strong {
        let code = canonical_code(t)?;
        if !codes.contains(&code) {
            r.fail("strongly connected class missing from the named list", Witness::graph("class", t));
        }
    }
    Ok(())
}

fn claim_6v(r: &mut Report) -> Result<()> {
    let family = special_family();
    let strong = tournaments_filtered(6, Predicate::StronglyConnected)?;
    let hits = par::map(&strong, |t| {
        family
            .iter()
            .find_map(|(name, g)| contains_copy(t, g).map(|m| (*name, m)))
    });
    for (t, hit) in strong.iter().zip(hits) {
        match hit {
            Some((_, m)) if m.is_injective() => {}
            _ => r.fail("strongly connected 6-vertex tournament without a copy", Witness::graph("member", t)),
        }
    }
    r.note(format!("{} strongly connected 6-vertex classes checked", strong.len()));
    Ok(())
}

/// Named `(u, v)` for the 3- and 4-layered gadget, per tournament.
pub const NAMED_GADGET_PAIRS: [(SpecialTournament, usize, usize); 5] = [
    (SpecialTournament::A, 3, 4),
    (SpecialTournament::B, 0, 3),
    (SpecialTournament::C, 0, 3),
    (SpecialTournament::D, 4, 2),
    (SpecialTournament::E, 0, 3),
];

/// `Q_ℓ -> T` for every `T` in `T_a..T_e`, by direct search; for `ℓ = 3, 4`
/// also through the gadget premises (`u -> v`, `v -> w -> u`, `u -> z -> v`
/// with `z` on a triangle, `u -> x -> y -> v` with `xy` on a 3- and a
/// 4-cycle).
///
/// The premises cannot be met in `T_c` by any pair: its only arcs on a
/// directed triangle are those of the triangles through the reversed arc,
/// and none of them fits `u -> x -> y -> v` together with some `w`. The
/// homomorphisms into `T_c` still exist, so this is reported as a note.
fn claim_q(r: &mut Report, lmin: usize, lmax: usize) -> Result<()> {
    r.scale("lmin", lmin);
    r.scale("lmax", lmax);
    for ell in lmin..=lmax {
        let q = q_gadget(ell)?;
        let (vs, vt) = q_terminals(ell);
        for (name, t) in special_family() {
            match hom_exists(&q, &t) {
                Some(m) => r.note(format!("Q_{ell} -> {name} with v_s -> {}, v_t -> {}", m.image(vs), m.image(vt))),
                None => r.fail(format!("no Q_{ell} -> {name}"), Witness::graph(name, &t)),
            }
            if ell <= 4 {
                match find_gadget_pair(&t) {
                    Some(g) => {
                        if q_hom_from_gadget(ell, &t, &g)?.is_none() {
                            r.fail(format!("gadget route fails for Q_{ell} -> {name}"), Witness::graph(name, &t));
                        }
                    }
                    None => r.note(format!("{name} has no pair meeting the gadget premises")),
                }
            }
        }
        if ell <= 4 {
            for (which, u, v) in NAMED_GADGET_PAIRS {
                let t = special_t(which).into_inner();
                let name = which.name();
                match gadget_pair_for(&t, u, v) {
                    Some(g) => {
                        if q_hom_from_gadget(ell, &t, &g)?.is_none() {
                            r.fail(format!("named pair ({u}, {v}) fails for Q_{ell} -> {name}"), Witness::graph(name, &t));
                        }
                    }
                    None => {
                        let pinned = hom_exists_pinned(&q, &t, &[(vs, u), (vt, v)])?.is_some();
                        r.note(format!(
                            "named pair ({u}, {v}) of {name} misses the gadget premises; Q_{ell} with these terminals: {}",
                            if pinned { "exists" } else { "none" }
                        ));
                    }
                }
            }
        }
        if ell == 5 {
            let te = special_t(SpecialTournament::E).into_inner();
            match hom_exists_pinned(&q, &te, &[(vs, 0), (vt, 3)])? {
                Some(m) => r.witness(Witness::graph("Q_5 -> T_e, v_s -> w_1, v_t -> w_4", &te).with_map(&m)),
                None => r.fail("no Q_5 -> T_e with v_s -> w_1, v_t -> w_4", Witness::graph("Te", &te)),
            }
            for (which, t) in SpecialTournament::ALL[..4].iter().map(|&w| (w, special_t(w).into_inner())) {
                let pair = (0..5)
                    .flat_map(|u| (0..5).map(move |v| (u, v)))
                    .find(|&(u, v)| t.has_arc(u, v) && t.out_degree(u) == 3 && t.in_degree(v) == 3);
                let ok = match pair {
                    Some((u, v)) => hom_exists_pinned(&q, &t, &[(vs, u), (vt, v)])?.is_some(),
                    None => false,
                };
                if !ok {
                    r.fail(format!("degree-3 terminal pair fails for Q_5 -> {}", which.name()), Witness::graph(which.name(), &t));
                }
            }
        }
    }
    for ell in 6..=7 {
        for (name, t) in special_family() {
            if reduce_and_map_q(ell, &t)?.is_none() {
                r.fail(format!("cycle shortening fails for Q_{ell} -> {name}"), Witness::graph(name, &t));
            }
        }
    }
    r.note("cycle shortening maps Q_6 and Q_7 into every T_a..T_e");
    Ok(())
}

/// `τ` of the glued paths `1, 2, ..., p - 1` between two vertices, the
/// boundary example for longest path order `p`.
fn glued_boundary(r: &mut Report, p: usize) -> Result<()> {
    let lengths: Vec<usize> = (1..p).collect();
    let h = glued_paths(&lengths)?;
    if layer_typing(&h, 3)?.is_none() {
        r.fail(format!("glued {lengths:?} is not 3-layered"), Witness::graph("glued", &h));
    }
    let res = tau(&h, (2 * p).min(9))?;
    let value = if res.is_exact() {
        res.tau.to_string()
    } else {
        format!(">= {}", res.tau)
    };
    r.note(format!("glued paths {lengths:?}: p = {p}, tau = {value}"));
    if let Some(w) = res.witnesses.iter().next_back().map(|(_, w)| w.clone()) {
        r.witness(Witness::graph(format!("glued {lengths:?} no-hom witness"), &w));
    }
    Ok(())
}

fn layered_small(r: &mut Report) -> Result<()> {
    let samples = [
        ("P_6^(4)", power_path(6, 4)?, 3),
        ("P_7^(5)", power_path(7, 5)?, 4),
        ("sub(TT_3, 3)", subdivide(&*transitive_tournament(3)?, 3)?, 3),
        ("glued [5, 6]", glued_paths(&[5, 6])?, 3),
    ];
    for (label, h, ell) in &samples {
        if layer_typing(h, *ell)?.is_none() {
            r.fail(format!("{label} is not {ell}-layered"), Witness::graph(*label, h));
            continue;
        }
        let p = longest_path_order(h)?;
        expect_tau(r, label, h, p)?;
    }
    let h = glued_paths(&[1, 2, 3, 4])?;
    let c52 = power_cycle(5, 2)?;
    let p = longest_path_order(&h)?;
    if p != 5 || layer_typing(&h, 3)?.is_none() {
        r.fail("boundary graph shape", Witness::graph("glued [1,2,3,4]", &h));
    }
    match hom_exists(&h, &c52) {
        None => r.note("glued [1,2,3,4] does not map into C_5^(2)"),
        Some(m) => r.fail("glued [1,2,3,4] maps into C_5^(2)", Witness::graph("C_5^(2)", &c52).with_map(&m)),
    }
    expect_tau(r, "glued [1,2,3,4]", &h, 6)?;
    for p in [3, 4] {
        glued_boundary(r, p)?;
    }
    Ok(())
}

fn draganic_k2(r: &mut Report, nmax: usize) -> Result<()> {
    r.scale("nmax", nmax);
    for n in 1..=nmax {
        let len = (2 * n).div_ceil(3);
        // squares of paths on at most two vertices are the paths themselves
        let pattern = if len > 2 { power_path(len, 2)? } else { directed_path(len)? };
        let census = tournaments(n)?;
        let miss = par::find_first_index(census.len(), |i| contains_copy(&census.tournament(i), &pattern).is_none());
        match miss {
            None => r.note(format!("all {} tournaments on {n} vertices contain P_{len}^(2)", census.len())),
            Some(i) => r.fail(format!("no P_{len}^(2) on {n} vertices"), Witness::graph("tournament", &census.member(i))),
        }
    }
    Ok(())
}

/// What [`domination_pack`] checks on a single tournament; `None` if it passes.
pub fn domination_violation(t: &Tournament) -> Option<&'static str> {
    if classify_domination(&domination_graph(t)) == DominationClassification::Other {
        Some("domination graph is neither an odd cycle with pendants nor a caterpillar forest")
    } else if !check_disjoint_arc_dichotomy(t) {
        Some("disjoint undominated arcs without a directed 4-cycle")
    } else if !check_c53_forcing(t) {
        Some("forcing premise without a copy of C_5^(3)")
    } else {
        None
    }
}

fn domination_pack(r: &mut Report, nmax: usize, random: usize, embed: usize, seed: u64) -> Result<()> {
    r.scale("nmax", nmax);
    r.scale("random_n12", random);
    r.scale("embed", embed);
    let mut smallest_2_dominated = None;
    for n in 1..=nmax {
        let census = tournaments(n)?;
        let bad = par::find_first_index(census.len(), |i| domination_violation(&census.tournament(i)).is_some());
        if let Some(i) = bad {
            let t = census.tournament(i);
            r.fail(domination_violation(&t).unwrap(), Witness::graph("tournament", &t));
        }
        if smallest_2_dominated.is_none() && n > 2 {
            if let Some(t) = census.tournaments().find(|t| all_k_subsets_dominated(t, 2)) {
                smallest_2_dominated = Some(t);
            }
        }
    }
    r.note(format!("classification, dichotomy and forcing hold on the census up to {nmax}"));
    match smallest_2_dominated {
        Some(t) => {
            r.note(format!("smallest tournament with every pair dominated has {} vertices", t.order()));
            r.witness(Witness::graph("least 2-dominated census member", &t));
        }
        None => r.note(format!("no tournament up to {nmax} vertices has every pair dominated")),
    }
    let bad = par::find_first_index(random, |i| {
        domination_violation(&random_tournament(12, &mut stream_rng(seed, i as u64))).is_some()
    });
    if let Some(i) = bad {
        let t = random_tournament(12, &mut stream_rng(seed, i as u64));
        r.fail(domination_violation(&t).unwrap(), Witness::graph("random tournament", &t));
    }
    let c3 = directed_cycle(3)?;
    let target = composition(&c3, &c3)?;
    if !all_k_subsets_dominated(&target, 2) {
        let s = first_undominated_subset(&target, 2).unwrap_or_default();
        r.fail(format!("C_3 comp C_3 leaves {s:?} undominated"), Witness::graph("C_3 comp C_3", &target));
    }
    for i in 0..embed {
        let mut g = stream_rng(seed ^ 0xD2, i as u64);
        let n = 2 + i % 11;
        let h = random_dk(n, 2, n, &mut g);
        if let Err(e) = embed_via_domination(&h, &target, 2) {
            r.fail(format!("no dominated embedding: {e}"), Witness::graph("source", &h));
            break;
        }
    }
    r.note(format!("{embed} random out-degree-2 graphs embed into C_3 comp C_3"));
    Ok(())
}

fn section5(r: &mut Report, samples: usize, seed: u64) -> Result<()> {
    r.scale("samples", samples);
    let rot = rotational_11();
    let mut triangles = 0;
    for a in 0..11 {
        for b in a + 1..11 {
            for c in b + 1..11 {
                let cyclic = (rot.has_arc(a, b) && rot.has_arc(b, c) && rot.has_arc(c, a))
                    || (rot.has_arc(a, c) && rot.has_arc(c, b) && rot.has_arc(b, a));
                if cyclic {
                    triangles += 1;
                    if is_dominated(&rot, bit(a) | bit(b) | bit(c)).is_none() {
                        let tri = rot.induced(bit(a) | bit(b) | bit(c));
                        r.fail(format!("triangle {a} {b} {c} undominated"), Witness::graph("triangle", &tri));
                    }
                }
            }
        }
    }
    r.note(format!("all {triangles} directed triangles of the rotational 11-tournament are dominated"));
    let target = composition(&rot, &directed_cycle(3)?)?;
    let all3 = all_k_subsets_dominated(&target, 3);
    r.note(format!("every 3-subset of rot11 comp C_3 dominated: {all3}"));
    for i in 0..samples {
        let mut g = stream_rng(seed ^ 0xD3, i as u64);
        let n = 3 + i % 14;
        let h = random_dk(n, 3, 5, &mut g);
        let hom = if all3 {
            embed_via_domination(&h, &target, 3).ok()
        } else {
            hom_exists(&h, &target)
        };
        if hom.is_none() {
            r.fail("out-degree-3 graph does not map into rot11 comp C_3", Witness::graph("source", &h));
            break;
        }
    }
    let univ = build_universal_dk(4, 2)?;
    for i in 0..samples {
        let mut g = stream_rng(seed ^ 0x42, i as u64);
        let h = random_dk(2 + i % 15, 2, 4, &mut g);
        if let Err(e) = univ.embed(&h) {
            r.fail(format!("universal graph rejects a member: {e}"), Witness::graph("source", &h));
            break;
        }
    }
    r.note(format!("{samples} samples each embed into rot11 comp C_3 and the universal graph for (4, 2)"));
    Ok(())
}

/// All acyclic orientations of `K_{n,n}` with a path through all `2n`
/// vertices, up to isomorphism. Side `A` is even vertices, side `B` odd.
pub fn hamiltonian_knn_orientations(n: usize) -> Result<Vec<OrientedGraph>> {
    if n > 4 {
        return Err(Error::CapExceeded {
            what: "K_{n,n} orientation enumeration",
            value: n as u64,
            cap: 4,
        });
    }
    let mut classes: Vec<OrientedGraph> = Vec::new();
    let mut codes = Vec::new();
    for mask in 0u32..1 << (n * n) {
        let arcs = (0..n * n).map(|e| {
            let (a, b) = (2 * (e / n), 2 * (e % n) + 1);
            if mask >> e & 1 == 0 {
                (a, b)
            } else {
                (b, a)
            }
        });
        let g = OrientedGraph::from_arcs(2 * n, arcs)?;
        if is_acyclic(&g) && longest_path_order(&g)? == 2 * n {
            let code = canonical_code(&g)?;
            if !codes.contains(&code) {
                codes.push(code);
                classes.push(canonical_graph(&g)?);
            }
        }
    }
    Ok(classes)
}

fn prop26(r: &mut Report, nmax: usize) -> Result<()> {
    r.scale("nmax", nmax);
    for n in 1..=nmax {
        let h = knn_orientation(n)?;
        if !is_acyclic(&h) || longest_path_order(&h)? != 2 * n {
            r.fail(format!("H_{n} is not acyclic with p = {}", 2 * n), Witness::graph("H", &h));
            continue;
        }
        let classes = hamiltonian_knn_orientations(n)?;
        if classes.len() == 1 && are_isomorphic(&classes[0], &h)? {
            r.note(format!("H_{n} is the only acyclic K_{{{n},{n}}} orientation with p = {}", 2 * n));
        } else {
            r.passed = false;
            r.note(format!("FAIL: {} classes of such orientations for n = {n}", classes.len()));
            r.witnesses.extend(classes.iter().map(|g| Witness::graph("class", g)));
        }
    }
    let h2 = knn_orientation(2)?;
    let res = tau(&h2, 9)?;
    r.note(format!("tau(H_2) = {}{}", if res.is_exact() { "" } else { ">= " }, res.tau));
    Ok(())
}
