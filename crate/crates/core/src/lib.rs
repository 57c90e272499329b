//! Strongly regular signed graphs: the signed-graph type and its formats,
//! the strong-regularity predicate, parameter feasibility, exhaustive
//! search up to signed isomorphism, and a catalog of the degree-5
//! net-regular examples.

pub mod canon;
pub mod catalog;
pub mod feasibility;
pub mod format;
pub mod graph;
pub mod search;
pub mod srsg;

pub use canon::{canonical_form, signed_isomorphic, CanonicalForm};
pub use graph::{DegreeTriple, GraphError, Sign, SignedGraph, WalkCounts2};
pub use srsg::{check_srsg, classify_class, CheckFailure, ClassLabel, SrsgParams};
