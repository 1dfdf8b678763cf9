//! Brute-force ground truth at desk scale.
//!
//! Rooted classes are generated bottom-up as non-increasing multisets of
//! `(child class, root-edge multiplicity)` pairs, so each class appears
//! exactly once; canonical codes re-check that. Free classes are counted
//! twice, by centroid rooting and by re-rooting every rooted class and
//! deduplicating, and the two must agree.

mod enumerate;
mod multigraph;

pub use enumerate::{enumerate_free, enumerate_rooted, enumerate_rooted_bounded, Oracle, DEFAULT_CLASS_BUDGET};
pub use multigraph::{CanonicalCode, CentroidType, RootedMultigraph};
