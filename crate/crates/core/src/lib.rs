//! Intersection graphs of ideals of finite products of chain rings, their
//! strong resolving graphs, and exact strong metric dimension.
//!
//! The crate computes everything from scratch (ideal lattice, distances,
//! mutually maximally distant pairs, exact vertex cover) and compares the
//! results with closed-form predictions for reduced, non-reduced and mixed
//! rings. Brute-force oracles for strong and plain metric dimension are
//! included for cross-checking on small graphs.

pub mod bitset;
pub mod closed_forms;
pub mod error;
pub mod export;
pub mod graph;
pub mod harness;
pub mod ideal_graph;
pub mod mis;
pub mod par;
pub mod ring;
pub mod srg;

pub use closed_forms::{predict, CaseTag, ClosedFormPrediction};
pub use error::{Error, Result};
pub use graph::{Distance, DistanceMatrix, Graph};
pub use harness::{analyze, sweep, AnalyzeOptions, CaseFilter, ClaimId, ClaimStatus, VerificationReport};
pub use ideal_graph::IntersectionGraph;
pub use mis::{max_independent_set, verify_witness, CoverResult, SolverConfig};
pub use par::Execution;
pub use ring::{IdealVector, RingSpec, ZeroPattern};
pub use srg::{build_srg, is_mmd, SrgGraph};
