//! Ranked improvement recommendations, phase gating and phase placement.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::checks::Finding;
use crate::model::Ontology;
use crate::tree::{evaluate, ConditionNode, EvaluateError, EvaluationResult, Phase, WeightProfile};

/// One suggested fix: raise the named leaf's score to 1 for `gain`
/// percentage points of OC.
#[derive(Debug, Clone, PartialEq)]
pub struct ImprovementAction {
    pub check_id: String,
    pub description: String,
    /// Projected OC increase in percentage points: w'·(1−score)·100.
    pub gain: f64,
    pub findings: Vec<Finding>,
}

/// Outcome of comparing an evaluation against the phase threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct GateDecision {
    pub current_phase: Phase,
    pub oc: f64,
    pub threshold: f64,
    pub advance: bool,
    pub next_phase: Option<Phase>,
}

/// One action per imperfect, positively weighted leaf, sorted by impact
/// (gain descending, ties by checkId). Gains sum to (1−oc)·100.
pub fn recommend_improvements(evaluation: &EvaluationResult) -> Vec<ImprovementAction> {
    let mut actions: Vec<ImprovementAction> = evaluation
        .leaf_results
        .iter()
        .filter_map(|(check_id, leaf)| {
            let weight = evaluation.leaf_relative_weight(check_id)?;
            if leaf.score >= 1.0 || weight <= 0.0 {
                return None;
            }
            Some(ImprovementAction {
                check_id: check_id.clone(),
                description: describe(check_id),
                gain: weight * (1.0 - leaf.score) * 100.0,
                findings: leaf.findings.clone(),
            })
        })
        .collect();
    actions.sort_by(|a, b| {
        b.gain
            .partial_cmp(&a.gain)
            .expect("gains are finite")
            .then_with(|| a.check_id.cmp(&b.check_id))
    });
    actions
}

fn describe(check_id: &str) -> String {
    use crate::checks::ids;
    let text = match check_id {
        ids::ENTITY_EXISTENCE => "add classes and properties",
        ids::INSTANCE_EXISTENCE => "populate classes with instances",
        ids::NATURAL_LANGUAGE => "describe concepts in natural language",
        ids::FORMAL_TBOX => "assert domains and ranges for properties",
        ids::FORMAL_ABOX => "make instance assertions respect the schema",
        ids::COMMON_CLASSES => "declare overlapping superclasses disjoint or merge them",
        ids::COMMON_INSTANCES => "resolve instances of disjoint classes",
        ids::EXTERNAL_INSTANCES => "classify instances into the decomposition",
        ids::INVERSE_PROPERTIES => "declare inverse properties",
        ids::PATH_EXISTENCE => "connect concepts",
        ids::HIERARCHY_RECOMMENDATION => "assert the recommended disjointness axioms",
        ids::IDENTICAL_DEFINITION => "merge synonymous elements",
        ids::HIERARCHY_REDUNDANCY => "remove redundant hierarchy assertions",
        ids::CIRCULATORY_ERRORS => "remove circulatory errors",
        ids::CHAIN_OF_INHERITANCE => "collapse or describe chains of inheritance",
        ids::PROPERTY_CLUMPS => "factor out repeated property groups",
        ids::LAZY_ENTITIES => "use or remove lazy entities",
        other => return format!("improve {other}"),
    };
    String::from(text)
}

/// The OC value if the named leaf's score were raised to 1; never below the
/// current OC.
pub fn project_gain(evaluation: &EvaluationResult, check_id: &str) -> Result<f64, String> {
    let leaf = evaluation
        .leaf_results
        .get(check_id)
        .ok_or_else(|| format!("unknown checkId `{check_id}`"))?;
    let weight = evaluation
        .leaf_relative_weight(check_id)
        .ok_or_else(|| format!("unknown checkId `{check_id}`"))?;
    Ok(evaluation.oc + weight * (1.0 - leaf.score))
}

/// Threshold comparison with ≥ semantics: reaching the threshold advances.
pub fn gate_phase(evaluation: &EvaluationResult, phase: Phase, threshold: f64) -> GateDecision {
    let next_phase = phase.next();
    GateDecision {
        current_phase: phase,
        oc: evaluation.oc,
        threshold,
        advance: evaluation.oc >= threshold && next_phase.is_some(),
        next_phase,
    }
}

/// The first phase whose profile scores the ontology below the threshold, in
/// phase order; post-development when every profile passes.
pub fn place_phase(
    ontology: &Ontology,
    tree: &ConditionNode,
    profiles: &BTreeMap<Phase, WeightProfile>,
    threshold: f64,
) -> Result<Phase, EvaluateError> {
    for phase in Phase::ALL {
        let Some(profile) = profiles.get(&phase) else { continue };
        let evaluation = evaluate(tree, profile, ontology)?;
        if evaluation.oc < threshold {
            return Ok(phase);
        }
    }
    Ok(Phase::PostDevelopment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::LeafResult;
    use crate::model::OntologyBuilder;
    use crate::tree::{builtin_profiles, default_tree, evaluate_with};

    fn scripted(phase: Phase, score_of: impl Fn(&str) -> f64) -> EvaluationResult {
        let tree = default_tree();
        let profile = WeightProfile::builtin(phase);
        evaluate_with(&tree, &profile, &mut |id| {
            Ok(LeafResult::new(id, score_of(id), alloc::vec::Vec::new()))
        })
        .unwrap()
    }

    #[test]
    fn perfect_evaluation_needs_nothing() {
        let evaluation = scripted(Phase::DetailDescription, |_| 1.0);
        assert!(recommend_improvements(&evaluation).is_empty());
    }

    #[test]
    fn gains_sum_to_the_remaining_deficit() {
        let evaluation = scripted(Phase::RestrictionsAndRules, |id| {
            (id.len() % 7) as f64 / 7.0
        });
        let actions = recommend_improvements(&evaluation);
        let total: f64 = actions.iter().map(|a| a.gain).sum();
        assert!((total - (1.0 - evaluation.oc) * 100.0).abs() < 1e-6);
        // sorted by gain descending
        for pair in actions.windows(2) {
            assert!(pair[0].gain >= pair[1].gain);
        }
    }

    #[test]
    fn projection_is_linear_and_never_lower() {
        let evaluation = scripted(Phase::TaxonomyDefinition, |id| {
            if id == crate::checks::ids::NATURAL_LANGUAGE {
                0.5
            } else {
                0.9
            }
        });
        let w = evaluation.leaf_relative_weight(crate::checks::ids::NATURAL_LANGUAGE).unwrap();
        let projected = project_gain(&evaluation, crate::checks::ids::NATURAL_LANGUAGE).unwrap();
        assert!((projected - (evaluation.oc + w * 0.5)).abs() < 1e-12);
        assert!(projected >= evaluation.oc);
        assert!(project_gain(&evaluation, "no.such.check").is_err());
    }

    #[test]
    fn projecting_every_leaf_covers_the_deficit() {
        let evaluation = scripted(Phase::PostDevelopment, |id| (id.len() % 5) as f64 / 5.0);
        let total_delta: f64 = evaluation
            .leaf_results
            .keys()
            .map(|id| project_gain(&evaluation, id).unwrap() - evaluation.oc)
            .sum();
        assert!((total_delta - (1.0 - evaluation.oc)).abs() < 1e-9);
    }

    #[test]
    fn gate_boundary_is_inclusive() {
        let evaluation = scripted(Phase::DetailDescription, |_| 0.8);
        let decision = gate_phase(&evaluation, Phase::DetailDescription, 0.8);
        assert!(decision.advance);
        assert_eq!(decision.next_phase, Some(Phase::RestrictionsAndRules));

        let decision = gate_phase(&evaluation, Phase::PostDevelopment, 0.8);
        assert!(!decision.advance);
        assert_eq!(decision.next_phase, None);
    }

    #[test]
    fn empty_ontology_places_at_the_first_phase() {
        let ontology = OntologyBuilder::new().build().unwrap();
        let phase = place_phase(&ontology, &default_tree(), &builtin_profiles(), 0.8).unwrap();
        assert_eq!(phase, Phase::BusinessVocabulary);
    }
}
