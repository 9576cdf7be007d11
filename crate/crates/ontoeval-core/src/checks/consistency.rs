//! Consistency check: circulatory errors, i.e. classes or properties that
//! are their own ancestor at distance 0, 1 or n in the hierarchy.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ids, penalty_ratio, Finding, LeafResult};
use crate::graph::{class_hierarchy_graph, property_hierarchy_graph};
use crate::model::{Iri, Ontology};

pub fn check_circulatory_errors(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut on_cycle: BTreeSet<Iri> = BTreeSet::new();

    for (graph, label) in [
        (class_hierarchy_graph(ontology), "class"),
        (property_hierarchy_graph(ontology), "property"),
    ] {
        for cycle in graph.cycles() {
            on_cycle.extend(cycle.iter().cloned());
            let members: Vec<Iri> = cycle.into_iter().collect();
            findings.push(Finding::new(
                "circulatory_error",
                members,
                alloc::format!("break this {label} hierarchy cycle by removing one relation"),
            ));
        }
    }

    let total = ontology.classes().len() + ontology.property_count();
    let score = penalty_ratio(on_cycle.len(), total);
    LeafResult::new(ids::CIRCULATORY_ERRORS, score, findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Axiom, OntologyBuilder};

    fn iri(s: &str) -> Iri {
        Iri::new(alloc::format!("http://example.org/{s}"))
    }

    #[test]
    fn three_cycle_among_five_classes() {
        let mut b = OntologyBuilder::new();
        for c in ["A", "B", "C", "D", "E"] {
            b.class(alloc::format!("http://example.org/{c}")).unwrap();
        }
        b.object_property("http://example.org/p").unwrap();
        b.axiom(Axiom::SubClassOf { sub: iri("A"), sup: iri("B") });
        b.axiom(Axiom::SubClassOf { sub: iri("B"), sup: iri("C") });
        b.axiom(Axiom::SubClassOf { sub: iri("C"), sup: iri("A") });
        let result = check_circulatory_errors(&b.build().unwrap());
        assert!((result.score - (1.0 - 3.0 / 6.0)).abs() < 1e-12);
        assert_eq!(result.findings.len(), 1);
    }

    #[test]
    fn acyclic_is_clean() {
        let mut b = OntologyBuilder::new();
        b.class("http://example.org/A").unwrap();
        b.class("http://example.org/B").unwrap();
        b.axiom(Axiom::SubClassOf { sub: iri("A"), sup: iri("B") });
        assert_eq!(check_circulatory_errors(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn self_subproperty_is_distance_zero() {
        let mut b = OntologyBuilder::new();
        b.object_property("http://example.org/p").unwrap();
        b.axiom(Axiom::SubPropertyOf { sub: iri("p"), sup: iri("p") });
        let result = check_circulatory_errors(&b.build().unwrap());
        assert_eq!(result.score, 0.0);
        assert_eq!(result.findings[0].subjects, alloc::vec![iri("p")]);
    }
}
