//! The leaf semantic checks of the completeness tree. Every check is a pure
//! function of the ontology snapshot returning a price in `[0, 1]` and
//! itemized findings; checks never fail, degenerate inputs produce defined
//! scores (an absent category scores 1.0, it cannot be faulted).

mod anomaly;
mod consistency;
mod description;
mod partition;
mod redundancy;

pub use anomaly::{check_lazy_entities, find_chain_of_inheritance, find_property_clumps};
pub use consistency::check_circulatory_errors;
pub use description::{
    check_entity_existence, check_formal_description_abox, check_formal_description_tbox,
    check_instance_existence, check_natural_language_description,
};
pub use partition::{
    check_common_classes, check_common_instances, check_external_instances,
    check_inverse_properties, check_path_existence, recommend_disjoint_axioms,
};
pub use redundancy::{check_hierarchy_redundancy, check_identical_formal_definition};

use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Iri, Ontology};

/// Stable check identifiers: the public contract used by weight profiles and
/// reports.
pub mod ids {
    pub const ENTITY_EXISTENCE: &str = "description.entity_existence";
    pub const INSTANCE_EXISTENCE: &str = "description.instance_existence";
    pub const NATURAL_LANGUAGE: &str = "description.nl";
    pub const FORMAL_TBOX: &str = "description.formal_tbox";
    pub const FORMAL_ABOX: &str = "description.formal_abox";
    pub const COMMON_CLASSES: &str = "partition.common_classes";
    pub const COMMON_INSTANCES: &str = "partition.common_instances";
    pub const EXTERNAL_INSTANCES: &str = "partition.external_instances";
    pub const INVERSE_PROPERTIES: &str = "partition.inverse_properties";
    pub const PATH_EXISTENCE: &str = "partition.path_existence";
    pub const HIERARCHY_RECOMMENDATION: &str = "partition.hierarchy_recommendation";
    pub const IDENTICAL_DEFINITION: &str = "redundancy.identical_definition";
    pub const HIERARCHY_REDUNDANCY: &str = "redundancy.hierarchy";
    pub const CIRCULATORY_ERRORS: &str = "consistency.circulatory";
    pub const CHAIN_OF_INHERITANCE: &str = "anomaly.chain_of_inheritance";
    pub const PROPERTY_CLUMPS: &str = "anomaly.property_clumps";
    pub const LAZY_ENTITIES: &str = "anomaly.lazy_entities";
}

/// One located problem plus a remediation hint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    /// Check-specific tag, e.g. `missing_label` or `disjoint_candidate`.
    pub kind: String,
    pub subjects: Vec<Iri>,
    pub suggestion: String,
}

impl Finding {
    pub fn new(
        kind: impl Into<String>,
        subjects: Vec<Iri>,
        suggestion: impl Into<String>,
    ) -> Self {
        Finding { kind: kind.into(), subjects, suggestion: suggestion.into() }
    }
}

/// Result of one semantic check: the price in [0, 1] plus its findings.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafResult {
    pub check_id: &'static str,
    pub score: f64,
    pub findings: Vec<Finding>,
}

impl LeafResult {
    pub fn new(check_id: &'static str, score: f64, findings: Vec<Finding>) -> Self {
        debug_assert!((0.0..=1.0).contains(&score), "score {score} out of range");
        LeafResult { check_id, score, findings }
    }
}

/// `1 - violations/total`, with an empty denominator scoring 1.0.
pub(crate) fn penalty_ratio(violations: usize, total: usize) -> f64 {
    if total == 0 {
        1.0
    } else {
        1.0 - violations as f64 / total as f64
    }
}

/// `hits/total`, with an empty denominator scoring 1.0.
pub(crate) fn coverage_ratio(hits: usize, total: usize) -> f64 {
    if total == 0 {
        1.0
    } else {
        hits as f64 / total as f64
    }
}

pub type CheckFn = fn(&Ontology) -> LeafResult;

/// Every check, keyed by its stable identifier.
pub const ALL_CHECKS: &[(&str, CheckFn)] = &[
    (ids::ENTITY_EXISTENCE, check_entity_existence),
    (ids::INSTANCE_EXISTENCE, check_instance_existence),
    (ids::NATURAL_LANGUAGE, check_natural_language_description),
    (ids::FORMAL_TBOX, check_formal_description_tbox),
    (ids::FORMAL_ABOX, check_formal_description_abox),
    (ids::COMMON_CLASSES, check_common_classes),
    (ids::COMMON_INSTANCES, check_common_instances),
    (ids::EXTERNAL_INSTANCES, check_external_instances),
    (ids::INVERSE_PROPERTIES, check_inverse_properties),
    (ids::PATH_EXISTENCE, check_path_existence),
    (ids::HIERARCHY_RECOMMENDATION, recommend_disjoint_axioms),
    (ids::IDENTICAL_DEFINITION, check_identical_formal_definition),
    (ids::HIERARCHY_REDUNDANCY, check_hierarchy_redundancy),
    (ids::CIRCULATORY_ERRORS, check_circulatory_errors),
    (ids::CHAIN_OF_INHERITANCE, find_chain_of_inheritance),
    (ids::PROPERTY_CLUMPS, find_property_clumps),
    (ids::LAZY_ENTITIES, check_lazy_entities),
];

/// Runs the check registered under `check_id`.
pub fn run_check(check_id: &str, ontology: &Ontology) -> Option<LeafResult> {
    ALL_CHECKS.iter().find(|(id, _)| *id == check_id).map(|(_, f)| f(ontology))
}
