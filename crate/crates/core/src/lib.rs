//! Core algorithms for working with biased graphs and quasi-graphic matroids.
//!
//! The crate is organised around three layers:
//!
//! * plain combinatorics: labelled multigraphs ([`Multigraph`]) and
//!   circuit-presented matroids ([`Matroid`]);
//! * biased graphs ([`BiasedGraph`]) connecting the two: signatures, derived
//!   biases, frame and lift matroids, balancing and blocking structure;
//! * the framework layer: verification of the four framework axioms,
//!   exhaustive framework enumeration, quasi-graphicness decisions and the
//!   graph constructions (pinches, curlings, twistings, fat thetas) that
//!   produce representations of graphic matroids.
//!
//! Everything is exact and deterministic: same inputs, same outputs, on every
//! run and for any worker count.

pub mod analysis;
pub mod bias;
pub mod construct;
pub mod framework;
pub mod graph;
pub mod io;
pub mod matroid;

pub use analysis::{
    analyze, AnalysisError, AnalyzedFramework, CircuitShape, InvariantViolation,
    MixedBalancingSet,
};
pub use bias::{BiasError, BiasedGraph, Signature};
pub use construct::{
    consecutive_twisting, fat_theta, four_twisting, pinch, simple_curling, ConstructError,
    TwistPart,
};
pub use framework::{
    classify_representation, decide_quasi_graphic, enumerate_frameworks,
    enumerate_frameworks_naive, is_excluded_minor, verify_framework, AxiomFailure, EnumOptions,
    EnumerationResult, ExclusionReport, FrameworkClass, FrameworkError, FrameworkReport,
    MinorEvidence, MinorOp, QgVerdict, Representation, SearchStats,
};
pub use graph::{CycleSubgraph, GraphError, Multigraph, Theta};
pub use io::IoError;
pub use matroid::{Matroid, MatroidError, SeparationReport};
