//! Compressibility of acyclic oriented graphs.
//!
//! The compressibility `τ(H)` of an acyclic oriented graph `H` is the least
//! `k` such that every tournament on `k` vertices receives a homomorphism
//! from `H`. This crate computes it exactly for small graphs by sweeping an
//! isomorph-free tournament census, and provides the constructions, searches
//! and structural checks used along the way.

pub mod canon;
pub mod census;
pub mod clique;
pub mod construct;
pub mod domination;
pub mod error;
pub mod expr;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod hom;
pub mod layered;
pub mod par;
pub mod random;
pub mod structure;
pub mod suite;
pub mod tau;

pub use error::{Error, Result};
pub use graph::{Arc, OrientedGraph, Tournament};
pub use hom::Homomorphism;
