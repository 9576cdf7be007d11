//! Property-based invariants: parser totality and round-tripping, check
//! score ranges, and the algebra of the evaluation tree.

use std::collections::BTreeMap;

use ontoeval_core::checks::{run_check, ALL_CHECKS};
use ontoeval_core::model::{AssertionValue, Axiom, Iri, Literal, Ontology, OntologyBuilder};
use ontoeval_core::tree::{
    default_tree, evaluate, evaluate_with, relative_weights, NodeBody, Phase, WeightProfile,
};
use ontoeval_core::{parse_ontology, serialize_ontology, LeafResult};
use proptest::prelude::*;

fn iri(kind: &str, index: usize) -> Iri {
    Iri::new(format!("http://example.org/{kind}{index}"))
}

/// A random well-formed ontology: declared entities plus axioms drawn only
/// from declared names, so the builder always accepts them.
fn arb_ontology() -> impl Strategy<Value = Ontology> {
    let axiom = (0u8..10, 0usize..5, 0usize..5, 0usize..3, 0usize..4, 0u32..3).prop_map(
        |(kind, a, b, p, x, n)| match kind {
            0 => Axiom::SubClassOf { sub: iri("C", a), sup: iri("C", b) },
            1 => {
                // self-disjointness is rejected by the builder
                let other = if a == b { (b + 1) % 5 } else { b };
                Axiom::DisjointClasses { a: iri("C", a), b: iri("C", other) }
            }
            2 => Axiom::Domain { property: iri("p", p), class: iri("C", a) },
            3 => Axiom::Range { property: iri("p", p), range: iri("C", b) },
            4 => Axiom::TypeAssertion { individual: iri("x", x), class: iri("C", a) },
            5 => Axiom::PropertyAssertion {
                subject: iri("x", x),
                property: iri("p", p),
                value: AssertionValue::Individual(iri("x", (x + 1) % 4)),
            },
            6 => Axiom::Label {
                subject: iri("C", a),
                literal: Literal::tagged(format!("c{a}"), "en"),
            },
            7 => Axiom::Comment {
                subject: iri("p", p),
                literal: Literal::plain(format!("prop {p}")),
            },
            8 => Axiom::InverseOf { a: iri("p", p), b: iri("p", (p + 1) % 3) },
            _ => Axiom::MinCardinality { class: iri("C", a), property: iri("p", p), count: n },
        },
    );
    proptest::collection::vec(axiom, 0..25).prop_map(|axioms| {
        let mut b = OntologyBuilder::new();
        for i in 0..5 {
            b.class(iri("C", i).as_str()).unwrap();
        }
        for i in 0..3 {
            b.object_property(iri("p", i).as_str()).unwrap();
        }
        for i in 0..4 {
            b.individual(iri("x", i).as_str()).unwrap();
        }
        for ax in axioms {
            b.axiom(ax);
        }
        b.build().expect("axioms reference declared names only")
    })
}

/// One score in [0,1] per leaf of the default tree, keyed by checkId.
fn arb_scores() -> impl Strategy<Value = BTreeMap<&'static str, f64>> {
    let ids: Vec<&'static str> = ALL_CHECKS.iter().map(|(id, _)| *id).collect();
    proptest::collection::vec(0.0f64..=1.0, ids.len()).prop_map(move |scores| {
        ids.iter().copied().zip(scores).collect()
    })
}

/// A random positive weight for every node path of the default tree.
fn arb_profile() -> impl Strategy<Value = WeightProfile> {
    let paths: Vec<String> =
        default_tree().paths().into_iter().map(|p| p.to_string()).collect();
    proptest::collection::vec(0.05f64..=5.0, paths.len()).prop_map(move |weights| {
        WeightProfile {
            phase: Phase::DetailDescription,
            weights: paths.iter().cloned().zip(weights).collect(),
        }
    })
}

fn scripted_eval(
    profile: &WeightProfile,
    scores: &BTreeMap<&'static str, f64>,
) -> ontoeval_core::EvaluationResult {
    evaluate_with(&default_tree(), profile, &mut |id| {
        Ok(LeafResult::new(id, scores[id], Vec::new()))
    })
    .expect("valid profile")
}

proptest! {
    #[test]
    fn parsing_never_panics(input in "\\PC*") {
        let _ = parse_ontology(&input);
    }

    #[test]
    fn parsing_turtle_shaped_noise_never_panics(
        input in "(@prefix |ex:[a-z]{1,3} |owl:Class|rdfs:subClassOf|\"[a-z ]{0,5}\"|<http://e/[a-z]{1,3}>|\\.|;|,|\\[|\\]| |\n){0,40}"
    ) {
        let _ = parse_ontology(&input);
    }

    #[test]
    fn serialization_round_trips(ontology in arb_ontology()) {
        let doc = serialize_ontology(&ontology);
        let (reparsed, diagnostics) = parse_ontology(&doc).expect("serializer output parses");
        prop_assert!(diagnostics.is_empty(), "diagnostics: {diagnostics:?}");
        prop_assert_eq!(reparsed, ontology);
    }

    #[test]
    fn every_check_scores_within_bounds(ontology in arb_ontology()) {
        for (id, _) in ALL_CHECKS {
            let result = run_check(id, &ontology).expect("registered check");
            prop_assert!(
                (0.0..=1.0).contains(&result.score),
                "{} scored {}", id, result.score
            );
        }
    }

    #[test]
    fn recursion_equals_flat_weighted_sum(
        profile in arb_profile(),
        scores in arb_scores(),
    ) {
        let result = scripted_eval(&profile, &scores);
        let tree = default_tree();
        let weights = relative_weights(&tree, &profile).unwrap();
        let flat: f64 = tree
            .leaves()
            .iter()
            .map(|(path, id)| weights[*path] * scores[id])
            .sum();
        prop_assert!((result.oc - flat).abs() < 1e-9);
        let total: f64 = weights.values().sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sibling_rescaling_preserves_oc(
        profile in arb_profile(),
        scores in arb_scores(),
        factor in 0.1f64..=10.0,
    ) {
        let baseline = scripted_eval(&profile, &scores);
        // rescale the children of the tbox node by one positive constant
        let mut scaled = profile.clone();
        for path in default_tree().paths() {
            if path.starts_with("oc/tbox/") && path.matches('/').count() == 2 {
                let w = scaled.weights[path] * factor;
                scaled.weights.insert(path.to_string(), w);
            }
        }
        let rescaled = scripted_eval(&scaled, &scores);
        prop_assert!((baseline.oc - rescaled.oc).abs() < 1e-9);
    }

    #[test]
    fn oc_is_monotone_in_every_leaf_score(
        profile in arb_profile(),
        scores in arb_scores(),
        bump in 0.0f64..=1.0,
    ) {
        let baseline = scripted_eval(&profile, &scores);
        for (id, _) in ALL_CHECKS {
            let mut improved = scores.clone();
            let raised = (improved[id] + bump).min(1.0);
            improved.insert(id, raised);
            let result = scripted_eval(&profile, &improved);
            prop_assert!(result.oc >= baseline.oc - 1e-12);
        }
    }

    #[test]
    fn zeroed_leaf_weight_ignores_that_score(
        profile in arb_profile(),
        scores in arb_scores(),
        replacement in 0.0f64..=1.0,
    ) {
        let mut zeroed = profile.clone();
        zeroed.weights.insert("oc/tbox/description/nl".to_string(), 0.0);
        let baseline = scripted_eval(&zeroed, &scores);
        let mut changed = scores.clone();
        changed.insert(ontoeval_core::checks::ids::NATURAL_LANGUAGE, replacement);
        let result = scripted_eval(&zeroed, &changed);
        prop_assert!((baseline.oc - result.oc).abs() < 1e-12);
    }

    #[test]
    fn evaluation_is_deterministic(ontology in arb_ontology()) {
        let tree = default_tree();
        let profile = WeightProfile::builtin(Phase::RestrictionsAndRules);
        let a = evaluate(&tree, &profile, &ontology).unwrap();
        let b = evaluate(&tree, &profile, &ontology).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn default_tree_structure_is_well_formed() {
    let tree = default_tree();
    // every aggregate path is the parent prefix of its children
    fn visit(node: &ontoeval_core::ConditionNode) {
        if let NodeBody::Aggregate(children) = &node.body {
            for child in children {
                assert!(child.path.starts_with(&format!("{}/", node.path)));
                visit(child);
            }
        }
    }
    visit(&tree);
}
