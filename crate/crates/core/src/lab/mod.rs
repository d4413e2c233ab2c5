//! Exploration tools: enumeration, census, transforms and condition search.

pub mod canon;
pub mod census;
pub mod derive;
pub mod enumerate;
pub mod transform;

use alloc::string::String;
use thiserror::Error;

use crate::graph::GraphError;
use crate::structure::{BaseFamily, StructureError};

pub use canon::{canonical_form, canonical_labeling, canonicalize, is_isomorphic, CanonicalForm};
pub use census::{
    census, census_graph, census_inputs, sort_records, summarize, CensusConfig, CensusFilter, CensusRecord, FamilySummary,
    Span, TwinMode,
};
pub use derive::{derive_condition, DeriveReport, Verdict};
pub use enumerate::{brute_force_forms, enumerate_bicyclic, enumerate_forms};
pub use transform::{path_to_star, star_merge, star_shift};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("order {n} is outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },
    #[error("weight grid is empty")]
    EmptyGrid,
    #[error("weight {0} is not positive")]
    NonPositiveWeight(String),
    #[error("{family}: {grid}^{edges} weightings exceed the cap of {cap}")]
    TooManyAssignments { family: BaseFamily, grid: usize, edges: usize, cap: usize },
    #[error("invalid filter: {0}")]
    Filter(String),
    #[error("vertex {vertex} is not usable in a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("the receiving vertex needs at least one pendant of its own")]
    EmptyStar,
    #[error("path on {0} vertices is too short, need at least 3")]
    PathTooShort(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}
