//! Description checks: entity and instance existence, natural-language
//! annotations, and formal descriptions of the schema and the assertions.

use alloc::format;
use alloc::vec::Vec;

use super::{coverage_ratio, ids, Finding, LeafResult};
use crate::model::{Axiom, InstanceMode, Iri, Ontology};

/// Half a point for having any class, half for having any property.
pub fn check_entity_existence(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut credit = 0usize;
    if ontology.classes().is_empty() {
        findings.push(Finding::new(
            "no_classes",
            Vec::new(),
            "define the schematic part of the ontology: add classes",
        ));
    } else {
        credit += 1;
    }
    if ontology.property_count() == 0 {
        findings.push(Finding::new(
            "no_properties",
            Vec::new(),
            "add object or datatype properties relating the classes",
        ));
    } else {
        credit += 1;
    }
    LeafResult::new(ids::ENTITY_EXISTENCE, credit as f64 / 2.0, findings)
}

/// Share of classes with at least one (inherited) instance.
pub fn check_instance_existence(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut instantiated = 0usize;
    for class in ontology.classes() {
        let instances = ontology
            .instances_of(class, InstanceMode::Inherited)
            .expect("class is declared");
        if instances.is_empty() {
            findings.push(Finding::new(
                "uninstantiated_class",
                alloc::vec![class.clone()],
                format!("add an individual that is a member of <{class}>"),
            ));
        } else {
            instantiated += 1;
        }
    }
    let score = coverage_ratio(instantiated, ontology.classes().len());
    LeafResult::new(ids::INSTANCE_EXISTENCE, score, findings)
}

/// Per entity: 0.5 credit for an English label, 0.5 for an English comment.
pub fn check_natural_language_description(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut credit = 0.0f64;
    let entities: Vec<&Iri> = ontology.classes().iter().chain(ontology.properties()).collect();
    for entity in &entities {
        let axioms = ontology.asserted_axioms(entity).expect("entity is declared");
        let has_label = axioms
            .iter()
            .any(|ax| matches!(ax, Axiom::Label { literal, .. } if literal.is_english()));
        let has_comment = axioms
            .iter()
            .any(|ax| matches!(ax, Axiom::Comment { literal, .. } if literal.is_english()));
        if has_label {
            credit += 0.5;
        } else {
            findings.push(Finding::new(
                "missing_label",
                alloc::vec![(*entity).clone()],
                format!("add an English rdfs:label to <{entity}>"),
            ));
        }
        if has_comment {
            credit += 0.5;
        } else {
            findings.push(Finding::new(
                "missing_comment",
                alloc::vec![(*entity).clone()],
                format!("add an English rdfs:comment to <{entity}>"),
            ));
        }
    }
    let score = if entities.is_empty() { 1.0 } else { credit / entities.len() as f64 };
    LeafResult::new(ids::NATURAL_LANGUAGE, score, findings)
}

/// Per property: 0.5 credit for an asserted domain, 0.5 for a range.
pub fn check_formal_description_tbox(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut credit = 0.0f64;
    let total = ontology.property_count();
    for property in ontology.properties() {
        if ontology.domains_of(property).is_empty() {
            findings.push(Finding::new(
                "missing_domain",
                alloc::vec![property.clone()],
                format!("assert rdfs:domain for <{property}>"),
            ));
        } else {
            credit += 0.5;
        }
        if ontology.ranges_of(property).is_empty() {
            findings.push(Finding::new(
                "missing_range",
                alloc::vec![property.clone()],
                format!("assert rdfs:range for <{property}>"),
            ));
        } else {
            credit += 0.5;
        }
    }
    let score = if total == 0 { 1.0 } else { credit / total as f64 };
    LeafResult::new(ids::FORMAL_TBOX, score, findings)
}

/// Share of individuals whose assertions respect domains, ranges and the
/// closed-world cardinality restrictions.
pub fn check_formal_description_abox(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut conforming = 0usize;
    for individual in ontology.individuals() {
        let mut violations = individual_violations(ontology, individual);
        if violations.is_empty() {
            conforming += 1;
        } else {
            findings.append(&mut violations);
        }
    }
    let score = coverage_ratio(conforming, ontology.individuals().len());
    LeafResult::new(ids::FORMAL_ABOX, score, findings)
}

fn individual_violations(ontology: &Ontology, individual: &Iri) -> Vec<Finding> {
    let mut findings = Vec::new();
    let types = ontology.inherited_types(individual);

    for axiom in ontology.axioms() {
        let Axiom::PropertyAssertion { subject, property, value } = axiom else { continue };
        if subject != individual {
            continue;
        }
        for domain in ontology.domains_of(property) {
            if !types.contains(&domain) {
                findings.push(Finding::new(
                    "domain_violation",
                    alloc::vec![individual.clone(), property.clone(), domain.clone()],
                    format!("type <{individual}> with the domain <{domain}> of <{property}>"),
                ));
            }
        }
        if let crate::model::AssertionValue::Individual(object) = value {
            let object_types = ontology.inherited_types(object);
            for range in ontology.ranges_of(property) {
                if ontology.classes().contains(&range) && !object_types.contains(&range) {
                    findings.push(Finding::new(
                        "range_violation",
                        alloc::vec![individual.clone(), property.clone(), range.clone()],
                        format!("type <{object}> with the range <{range}> of <{property}>"),
                    ));
                }
            }
        }
    }

    // closed-world cardinality: count asserted values of the property
    for axiom in ontology.axioms() {
        let (class, property, count, max) = match axiom {
            Axiom::MinCardinality { class, property, count } => (class, property, count, false),
            Axiom::MaxCardinality { class, property, count } => (class, property, count, true),
            _ => continue,
        };
        if !types.contains(class) {
            continue;
        }
        let asserted = ontology
            .axioms()
            .iter()
            .filter(|ax| {
                matches!(ax, Axiom::PropertyAssertion { subject, property: p, .. }
                    if subject == individual && p == property)
            })
            .count();
        let violated = if max { asserted > *count as usize } else { asserted < *count as usize };
        if violated {
            let bound = if max { "at most" } else { "at least" };
            findings.push(Finding::new(
                "cardinality_violation",
                alloc::vec![individual.clone(), property.clone(), class.clone()],
                format!(
                    "<{individual}> needs {bound} {count} value(s) of <{property}> (has {asserted})"
                ),
            ));
        }
    }
    findings
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AssertionValue, Literal, OntologyBuilder};

    fn iri(s: &str) -> Iri {
        Iri::new(alloc::format!("http://example.org/{s}"))
    }

    fn classes(builder: &mut OntologyBuilder, names: &[&str]) {
        for n in names {
            builder.class(alloc::format!("http://example.org/{n}")).unwrap();
        }
    }

    #[test]
    fn entity_existence_steps() {
        let empty = OntologyBuilder::new().build().unwrap();
        assert_eq!(check_entity_existence(&empty).score, 0.0);

        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A"]);
        assert_eq!(check_entity_existence(&b.build().unwrap()).score, 0.5);

        b.object_property("http://example.org/p").unwrap();
        assert_eq!(check_entity_existence(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn instance_existence_quarters() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A", "B", "C", "D"]);
        b.individual("http://example.org/x").unwrap();
        b.axiom(Axiom::TypeAssertion { individual: iri("x"), class: iri("A") });
        let o = b.build().unwrap();
        let result = check_instance_existence(&o);
        assert_eq!(result.score, 0.25);
        assert_eq!(result.findings.len(), 3);
    }

    #[test]
    fn instance_existence_vacuous() {
        let o = OntologyBuilder::new().build().unwrap();
        assert_eq!(check_instance_existence(&o).score, 1.0);
    }

    #[test]
    fn natural_language_half_annotated() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A", "B"]);
        b.axiom(Axiom::Label { subject: iri("A"), literal: Literal::tagged("A", "en") });
        b.axiom(Axiom::Comment { subject: iri("A"), literal: Literal::plain("the A") });
        let result = check_natural_language_description(&b.build().unwrap());
        assert_eq!(result.score, 0.5);
        assert_eq!(result.findings.len(), 2);
    }

    #[test]
    fn natural_language_labels_only() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A", "B"]);
        for c in ["A", "B"] {
            b.axiom(Axiom::Label { subject: iri(c), literal: Literal::tagged(c, "en") });
        }
        assert_eq!(check_natural_language_description(&b.build().unwrap()).score, 0.5);
    }

    #[test]
    fn non_english_label_earns_no_credit() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A"]);
        b.axiom(Axiom::Label { subject: iri("A"), literal: Literal::tagged("A", "de") });
        let result = check_natural_language_description(&b.build().unwrap());
        assert_eq!(result.score, 0.0);
    }

    #[test]
    fn formal_tbox_mixed_properties() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A"]);
        for p in ["p", "q", "r"] {
            b.object_property(alloc::format!("http://example.org/{p}")).unwrap();
        }
        b.axiom(Axiom::Domain { property: iri("p"), class: iri("A") });
        b.axiom(Axiom::Range { property: iri("p"), range: iri("A") });
        b.axiom(Axiom::Domain { property: iri("q"), class: iri("A") });
        // (1 + 0.5 + 0) / 3
        assert_eq!(check_formal_description_tbox(&b.build().unwrap()).score, 0.5);
    }

    #[test]
    fn abox_unconstrained_individual_conforms() {
        let mut b = OntologyBuilder::new();
        b.individual("http://example.org/x").unwrap();
        assert_eq!(check_formal_description_abox(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn abox_domain_violation_flagged() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A"]);
        b.object_property("http://example.org/p").unwrap();
        b.individual("http://example.org/x").unwrap();
        b.individual("http://example.org/y").unwrap();
        b.axiom(Axiom::Domain { property: iri("p"), class: iri("A") });
        b.axiom(Axiom::PropertyAssertion {
            subject: iri("x"),
            property: iri("p"),
            value: AssertionValue::Individual(iri("y")),
        });
        let result = check_formal_description_abox(&b.build().unwrap());
        assert_eq!(result.score, 0.5);
        assert_eq!(result.findings[0].kind, "domain_violation");
    }

    #[test]
    fn abox_min_cardinality_closed_world() {
        let mut b = OntologyBuilder::new();
        classes(&mut b, &["A"]);
        b.object_property("http://example.org/p").unwrap();
        b.individual("http://example.org/x").unwrap();
        b.individual("http://example.org/y").unwrap();
        b.axiom(Axiom::TypeAssertion { individual: iri("x"), class: iri("A") });
        b.axiom(Axiom::MinCardinality { class: iri("A"), property: iri("p"), count: 2 });
        b.axiom(Axiom::PropertyAssertion {
            subject: iri("x"),
            property: iri("p"),
            value: AssertionValue::Individual(iri("y")),
        });
        let result = check_formal_description_abox(&b.build().unwrap());
        assert!(result.findings.iter().any(|f| f.kind == "cardinality_violation"));
        assert_eq!(result.score, 0.5);
    }
}
