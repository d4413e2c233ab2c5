//! Exact inertia of positively weighted graphs.
//!
//! The crate computes the numbers of positive, negative and zero eigenvalues
//! of the adjacency matrix of a graph whose edges carry positive rational
//! weights, without ever touching floating point. Three independent routes
//! are provided:
//!
//! - [`engine::congruence_inertia`]: symmetric elimination by congruence
//!   operations (Sylvester's law of inertia),
//! - [`engine::descartes_inertia`]: sign variations of the exact
//!   characteristic polynomial,
//! - [`closed_form::structural_inertia`]: pendant-vertex reduction with
//!   closed forms for paths and cycles.
//!
//! On top of those, [`structure`] recognises bicyclic graphs and labels their
//! pendant-free base, [`extremal`] evaluates lower bounds and weight
//! conditions for small indices and small rank, and [`lab`] enumerates every
//! small bicyclic graph to check those statements exhaustively.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_form;
pub mod condition;
pub mod engine;
pub mod extremal;
pub mod graph;
pub mod lab;
pub mod matrix;
pub mod rational;
pub mod structure;

pub use closed_form::{cycle_inertia, path_inertia, structural_inertia};
pub use engine::{char_poly, congruence_inertia, descartes_inertia};
pub use graph::{Subgraph, WeightedGraph};
pub use matrix::{Inertia, SymmetricMatrix};
pub use rational::Rational;
pub use structure::{BaseFamily, BaseKind, BicyclicBase};
