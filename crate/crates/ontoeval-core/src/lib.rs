//! Continuous ontology evaluation: a weighted tree of semantic checks over an
//! OWL-style ontology produces a completeness score in `[0, 1]`, ranked
//! improvement recommendations and phase gating for stepwise development.
//!
//! The crate is `no_std` + `alloc`; everything here is pure computation over
//! immutable snapshots. File formats, reports and the command line live in the
//! companion `ontoeval` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod advisor;
pub mod checks;
pub mod graph;
pub mod model;
pub mod parser;
pub mod replay;
pub mod tree;

pub use advisor::{gate_phase, place_phase, recommend_improvements, GateDecision, ImprovementAction};
pub use checks::{Finding, LeafResult};
pub use model::{Axiom, EntityKind, Iri, Literal, Ontology, OntologyBuilder};
pub use parser::{parse_ontology, serialize_ontology, ParseDiagnostic, Severity};
pub use replay::{replay, ReplayRecord};
pub use tree::{
    builtin_profiles, default_tree, evaluate, evaluate_with, relative_weights, ConditionNode,
    ElementCounts, EvaluationResult, Phase, WeightProfile,
};

/// Default OC threshold for phase gating.
pub const DEFAULT_THRESHOLD: f64 = 0.80;
