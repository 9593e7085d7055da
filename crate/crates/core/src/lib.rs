//! Honeycomb toroidal graphs HTG(m, n, l): construction as combinatorial
//! graphs and as Cayley graphs of generalized dihedral groups, arithmetic
//! classification of their full automorphism groups, and an independent
//! graph-automorphism engine that cross-checks every classification.

pub mod aut;
pub mod census;
pub mod classify;
pub mod construct;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod named;

pub use aut::{PermGroup, SArcReport};
pub use census::CensusRow;
pub use classify::{Category, ClassificationResult, ConditionFlags};
pub use construct::{ColoredHtg, EdgeColor, HtgParams, ParamError};
pub use graph::{Graph, GraphError, StructuralProfile};
pub use group::{GroupElement, GroupSpec};
pub use named::{ExceptionalId, ExceptionalKind, NamedGraph};
