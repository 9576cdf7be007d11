//! Redundancy checks: synonym candidates via identical formal definitions,
//! and hierarchy axioms already implied by the rest of the hierarchy.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ids, penalty_ratio, Finding, LeafResult};
use crate::graph::{class_hierarchy_graph, property_hierarchy_graph, Digraph};
use crate::model::{Axiom, Declaration, Iri, Ontology};

/// Two same-kind elements whose asserted axiom sets (subject rewritten to a
/// placeholder, annotations excluded) are equal and non-empty describe the
/// same concept under different names.
pub fn check_identical_formal_definition(ontology: &Ontology) -> LeafResult {
    let placeholder = Iri::new("urn:ontoeval:self");
    let mut elements: Vec<(&Iri, Declaration)> = Vec::new();
    for class in ontology.classes() {
        elements.push((class, Declaration::Class));
    }
    for p in ontology.object_properties() {
        elements.push((p, Declaration::ObjectProperty));
    }
    for p in ontology.data_properties() {
        elements.push((p, Declaration::DataProperty));
    }
    for i in ontology.individuals() {
        elements.push((i, Declaration::Individual));
    }

    let definitions: Vec<BTreeSet<Axiom>> = elements
        .iter()
        .map(|(iri, _)| {
            ontology
                .asserted_axioms(iri)
                .expect("element is declared")
                .into_iter()
                .filter(|ax| !ax.is_annotation())
                .map(|ax| ax.with_placeholder(iri, &placeholder))
                .collect()
        })
        .collect();

    let mut findings = Vec::new();
    let mut flagged: BTreeSet<&Iri> = BTreeSet::new();
    for i in 0..elements.len() {
        if definitions[i].is_empty() {
            continue;
        }
        for j in (i + 1)..elements.len() {
            if elements[i].1 == elements[j].1 && definitions[i] == definitions[j] {
                let (a, b) = (elements[i].0, elements[j].0);
                flagged.insert(a);
                flagged.insert(b);
                findings.push(Finding::new(
                    "identical_definition",
                    alloc::vec![a.clone(), b.clone()],
                    format!("<{a}> and <{b}> have identical formal definitions; merge the synonyms"),
                ));
            }
        }
    }
    let score = penalty_ratio(flagged.len(), elements.len());
    LeafResult::new(ids::IDENTICAL_DEFINITION, score, findings)
}

fn hierarchy_edge_implied(graph: &Digraph, from: &Iri, to: &Iri) -> bool {
    let mut pruned = Digraph::new();
    for node in graph.nodes() {
        pruned.add_node(node.clone());
    }
    for (a, b) in graph.edges() {
        if !(a == from && b == to) {
            pruned.add_edge(a.clone(), b.clone());
        }
    }
    pruned.reaches(from, to)
}

/// A SubClassOf / SubPropertyOf / rdf:type assertion is redundant when it
/// duplicates another assertion or is implied by the transitive closure of
/// the remaining hierarchy axioms.
pub fn check_hierarchy_redundancy(ontology: &Ontology) -> LeafResult {
    let class_graph = class_hierarchy_graph(ontology);
    let property_graph = property_hierarchy_graph(ontology);

    let mut findings = Vec::new();
    let mut total = 0usize;
    let mut redundant = 0usize;

    for axiom in ontology.axioms() {
        if !axiom.is_hierarchy() {
            continue;
        }
        let multiplicity = ontology.multiplicity(axiom);
        total += multiplicity;
        if multiplicity > 1 {
            redundant += multiplicity - 1;
            findings.push(Finding::new(
                "duplicate_assertion",
                axiom.subjects().into_iter().cloned().collect(),
                format!("remove the {} duplicate assertion(s) of {axiom:?}", multiplicity - 1),
            ));
        }
        let implied = match axiom {
            Axiom::SubClassOf { sub, sup } => hierarchy_edge_implied(&class_graph, sub, sup),
            Axiom::SubPropertyOf { sub, sup } => {
                hierarchy_edge_implied(&property_graph, sub, sup)
            }
            Axiom::TypeAssertion { individual, class } => ontology
                .asserted_types(individual)
                .iter()
                .filter(|other| *other != class)
                .any(|other| ontology.superclass_closure(other).contains(class)),
            _ => unreachable!("is_hierarchy covers exactly these"),
        };
        if implied {
            redundant += 1;
            let (subjects, suggestion) = match axiom {
                Axiom::SubClassOf { sub, sup } => (
                    vec![sub.clone(), sup.clone()],
                    format!("<{sub}> rdfs:subClassOf <{sup}> follows transitively; remove it"),
                ),
                Axiom::SubPropertyOf { sub, sup } => (
                    vec![sub.clone(), sup.clone()],
                    format!("<{sub}> rdfs:subPropertyOf <{sup}> follows transitively; remove it"),
                ),
                Axiom::TypeAssertion { individual, class } => (
                    vec![individual.clone(), class.clone()],
                    format!("<{individual}> is already a member of <{class}> via a subclass; remove the direct type"),
                ),
                _ => unreachable!(),
            };
            findings.push(Finding::new("implied_hierarchy_axiom", subjects, suggestion));
        }
    }
    let score = penalty_ratio(redundant, total);
    LeafResult::new(ids::HIERARCHY_REDUNDANCY, score, findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::OntologyBuilder;

    fn iri(s: &str) -> Iri {
        Iri::new(alloc::format!("http://example.org/{s}"))
    }

    fn builder(classes: &[&str]) -> OntologyBuilder {
        let mut b = OntologyBuilder::new();
        for c in classes {
            b.class(alloc::format!("http://example.org/{c}")).unwrap();
        }
        b
    }

    fn sub(a: &str, b: &str) -> Axiom {
        Axiom::SubClassOf { sub: iri(a), sup: iri(b) }
    }

    #[test]
    fn synonym_classes_flagged() {
        let mut b = builder(&["A", "B", "Bp"]);
        b.axiom(sub("B", "A"));
        b.axiom(sub("Bp", "A"));
        let result = check_identical_formal_definition(&b.build().unwrap());
        assert_eq!(result.findings.len(), 1);
        assert!((result.score - (1.0 - 2.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn distinct_definitions_are_clean() {
        let mut b = builder(&["A", "B", "C"]);
        b.axiom(sub("B", "A"));
        b.axiom(sub("C", "B"));
        assert_eq!(check_identical_formal_definition(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn empty_definitions_never_match() {
        let b = builder(&["A", "B"]);
        assert_eq!(check_identical_formal_definition(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn transitive_subclass_edge_is_redundant() {
        let mut b = builder(&["A", "B", "C"]);
        b.axiom(sub("A", "B"));
        b.axiom(sub("B", "C"));
        b.axiom(sub("A", "C"));
        let result = check_hierarchy_redundancy(&b.build().unwrap());
        assert!((result.score - (1.0 - 1.0 / 3.0)).abs() < 1e-12);
        assert_eq!(result.findings.len(), 1);
        assert_eq!(result.findings[0].kind, "implied_hierarchy_axiom");
    }

    #[test]
    fn plain_chain_is_clean() {
        let mut b = builder(&["A", "B", "C"]);
        b.axiom(sub("A", "B"));
        b.axiom(sub("B", "C"));
        assert_eq!(check_hierarchy_redundancy(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn redundant_type_assertion() {
        let mut b = builder(&["A", "B"]);
        b.individual("http://example.org/x").unwrap();
        b.axiom(sub("B", "A"));
        b.axiom(Axiom::TypeAssertion { individual: iri("x"), class: iri("B") });
        b.axiom(Axiom::TypeAssertion { individual: iri("x"), class: iri("A") });
        let result = check_hierarchy_redundancy(&b.build().unwrap());
        // x:A is implied by x:B and B subClassOf A; 1 of 3 hierarchy axioms
        assert!((result.score - (1.0 - 1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn duplicates_count_as_redundant() {
        let mut b = builder(&["A", "B"]);
        b.axiom(sub("B", "A"));
        b.axiom(sub("B", "A"));
        let result = check_hierarchy_redundancy(&b.build().unwrap());
        assert_eq!(result.score, 0.5);
        assert_eq!(result.findings[0].kind, "duplicate_assertion");
    }
}
