//! Browser bindings: build a graph from an expression, look at the domination
//! graph of a tournament, and sweep compressibility over small censuses.
//!
//! Every export returns a JSON string; errors come back as JS exceptions
//! carrying the message. The plain functions are usable (and tested) natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ogt_core::domination::{classify_domination, domination_graph, DominationClassification};
use ogt_core::format::{to_digraph6, to_hex};
use ogt_core::structure::{longest_path_order, is_acyclic};
use ogt_core::tau::tau;
use ogt_core::{expr, OrientedGraph, Tournament};

/// Largest sweep level offered in the page; level 8 takes a few seconds single-threaded.
pub const WEB_MAX_K: usize = 8;

#[derive(Serialize)]
struct GraphView {
    n: usize,
    arcs: Vec<(usize, usize)>,
    digraph6: String,
    hex: Option<String>,
    tournament: bool,
    /// Vertices on a longest path, when acyclic.
    longest_path: Option<usize>,
}

fn view(g: &OrientedGraph) -> GraphView {
    GraphView {
        n: g.order(),
        arcs: g.arcs().map(|a| (a.source, a.target)).collect(),
        digraph6: to_digraph6(g),
        hex: Tournament::try_from(g.clone()).ok().map(|t| to_hex(&t)),
        tournament: g.is_tournament(),
        longest_path: is_acyclic(g).then(|| longest_path_order(g).ok()).flatten(),
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn construct_json(input: &str) -> Result<String, String> {
    let g = expr::parse(input).map_err(|e| e.to_string())?;
    to_json(&view(&g))
}

#[derive(Serialize)]
struct DominationView {
    tournament: GraphView,
    undominated: Vec<(usize, usize)>,
    shape: &'static str,
    classification: DominationClassification,
}

pub fn domination_json(input: &str) -> Result<String, String> {
    let g = expr::parse(input).map_err(|e| e.to_string())?;
    let t = Tournament::try_from(g).map_err(|_| "not a tournament".to_string())?;
    let dom = domination_graph(&t);
    let classification = classify_domination(&dom);
    to_json(&DominationView {
        tournament: view(&t),
        undominated: dom.arcs().map(|a| (a.source, a.target)).collect(),
        shape: classification.shape(),
        classification,
    })
}

#[derive(Serialize)]
struct TauView {
    tau: usize,
    exact: bool,
    p: usize,
    witnesses: std::collections::BTreeMap<usize, String>,
}

pub fn tau_json(input: &str, max_k: usize) -> Result<String, String> {
    if max_k > WEB_MAX_K {
        return Err(format!("the page sweeps at most {WEB_MAX_K} vertices"));
    }
    let g = expr::parse(input).map_err(|e| e.to_string())?;
    let res = tau(&g, max_k).map_err(|e| e.to_string())?;
    to_json(&TauView {
        tau: res.tau,
        exact: res.is_exact(),
        p: res.p,
        witnesses: res.witness_hex(),
    })
}

#[wasm_bindgen]
pub fn construct(input: &str) -> Result<String, JsValue> {
    construct_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn domination(input: &str) -> Result<String, JsValue> {
    domination_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compressibility(input: &str, max_k: usize) -> Result<String, JsValue> {
    tau_json(input, max_k).map_err(|e| JsValue::from_str(&e))
}
