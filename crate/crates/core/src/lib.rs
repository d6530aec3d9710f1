//! Path separators of graphs.
//!
//! A family of paths separates a graph when, for every ordered pair of
//! distinct edges `(e, f)`, some path contains `e` but not `f`. This crate
//! builds such families for forests, complete graphs, hypercubes, random
//! graphs and arbitrary graphs, verifies them exactly, evaluates lower and
//! upper bounds on the minimum family size, computes that minimum for tiny
//! graphs, and simulates single-link fault localization with path tests.

pub mod bounds;
pub mod coloring;
pub mod construct;
pub mod cover;
pub mod detect;
pub mod exact;
pub mod faultsim;
pub mod generators;
pub mod graph;
pub mod io;
pub mod signature;
pub mod verify;

pub use graph::{EdgeId, FamilyError, Graph, GraphError, Path, PathError, PathFamily, Vertex};
pub use signature::SignatureTable;
pub use verify::{check_separator, check_test_set, is_separator, unseparated_pairs, SeparationReport};
pub use construct::{construct, detect_method, ConstructError, ConstructionResult, Method};

/// Bound report over `f64`.
pub type BoundsReport = bounds::BoundsReport<f64>;
/// Entropy lower bound forms over `f64`.
pub type EntropyBound = bounds::EntropyBound<f64>;
/// General upper bound and its cap over `f64`.
pub type GeneralUpperBound = bounds::GeneralUpperBound<f64>;
pub use exact::{exact_psn, ExactSolution};
pub use faultsim::{campaign, CampaignReport, DecodeOutcome};
