//! Anomaly checks: chains of inheritance, property clumps and lazy entities.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{ids, penalty_ratio, Finding, LeafResult};
use crate::graph::class_property_graph;
use crate::model::{Axiom, InstanceMode, Iri, Ontology};

/// A pass-through class has exactly one superclass and no asserted axioms
/// besides its SubClassOf.
fn is_pass_through(ontology: &Ontology, class: &Iri) -> bool {
    ontology.direct_superclasses(class).expect("declared").len() == 1
        && ontology.asserted_non_sub_axioms(class).expect("declared").is_empty()
}

fn is_described(ontology: &Ontology, class: &Iri) -> bool {
    !ontology.asserted_non_sub_axioms(class).expect("declared").is_empty()
}

/// Maximal runs of pass-through classes between two described endpoints.
/// Runs are discovered greedily from the top and split at branch points, so
/// no intermediate class is counted twice. Each chain of n intermediates
/// costs n divided by the total number of asserted SubClassOf axioms;
/// the price starts at 1 and is clamped to [0, 1].
pub fn find_chain_of_inheritance(ontology: &Ontology) -> LeafResult {
    let subclass_total: usize = ontology
        .axioms()
        .iter()
        .filter(|ax| matches!(ax, Axiom::SubClassOf { .. }))
        .map(|ax| ontology.multiplicity(ax))
        .sum();

    let pass_through: BTreeSet<&Iri> = ontology
        .classes()
        .iter()
        .filter(|class| is_pass_through(ontology, class))
        .collect();

    let parent_of = |class: &Iri| -> Iri {
        ontology
            .direct_superclasses(class)
            .expect("declared")
            .into_iter()
            .next()
            .expect("pass-through class has exactly one superclass")
    };

    let mut findings = Vec::new();
    let mut price = 1.0f64;

    for start in &pass_through {
        let parent = parent_of(start);
        // a run starts where it cannot be absorbed into the one above
        let continues_upward = pass_through.contains(&parent)
            && ontology.direct_subclasses(&parent).expect("declared").len() == 1;
        if continues_upward {
            continue;
        }
        // extend downward while the hierarchy stays a simple pass-through path
        let mut run: Vec<Iri> = alloc::vec![(*start).clone()];
        loop {
            let current = run.last().expect("run is non-empty").clone();
            let children = ontology.direct_subclasses(&current).expect("declared");
            if children.len() != 1 {
                break;
            }
            let child = children.into_iter().next().expect("one child");
            if pass_through.contains(&child) {
                run.push(child);
            } else {
                break;
            }
        }
        // both endpoints must carry a description of their own
        if !is_described(ontology, &parent) {
            continue;
        }
        let last = run.last().expect("run is non-empty");
        let Some(bottom) = ontology
            .direct_subclasses(last)
            .expect("declared")
            .into_iter()
            .find(|child| is_described(ontology, child))
        else {
            continue;
        };
        let n = run.len();
        if subclass_total > 0 {
            price -= n as f64 / subclass_total as f64;
        }
        let mut subjects = alloc::vec![parent.clone(), bottom.clone()];
        subjects.extend(run.iter().cloned());
        findings.push(Finding::new(
            "inheritance_chain",
            subjects,
            format!(
                "collapse the {n} pass-through class(es) between <{parent}> and <{bottom}> or describe them"
            ),
        ));
    }

    LeafResult::new(ids::CHAIN_OF_INHERITANCE, price.clamp(0.0, 1.0), findings)
}

/// Repeated groups of properties shared verbatim by multiple classes.
///
/// The class-property graph is searched for the maximal biclique maximizing
/// m*n/(m+n) (ties: larger m*n, then lexicographic order); the clump's edges
/// are removed and the search repeats. Each clump costs
/// (m*n - (m+n)) / total property count, so only bicliques with m*n > m+n
/// qualify. The price starts at 1 and is clamped to [0, 1].
pub fn find_property_clumps(ontology: &Ontology) -> LeafResult {
    let total_properties = ontology.property_count();
    let mut graph = class_property_graph(ontology);
    let mut findings = Vec::new();
    let mut price = 1.0f64;

    loop {
        let candidates = graph.enumerate_maximal_bicliques(2, 2);
        let best = candidates
            .into_iter()
            .filter(|(classes, props)| classes.len() * props.len() > classes.len() + props.len())
            .max_by(|(c1, p1), (c2, p2)| {
                let (m1, n1) = (c1.len() as f64, p1.len() as f64);
                let (m2, n2) = (c2.len() as f64, p2.len() as f64);
                let ratio1 = m1 * n1 / (m1 + n1);
                let ratio2 = m2 * n2 / (m2 + n2);
                ratio1
                    .partial_cmp(&ratio2)
                    .expect("finite ratios")
                    .then_with(|| (m1 * n1).partial_cmp(&(m2 * n2)).expect("finite products"))
                    // reversed set comparison so max_by picks the smallest set
                    .then_with(|| c2.cmp(c1))
                    .then_with(|| p2.cmp(p1))
            });
        let Some((classes, props)) = best else { break };
        let (m, n) = (classes.len(), props.len());
        if total_properties > 0 {
            price -= (m * n - (m + n)) as f64 / total_properties as f64;
        }
        for class in &classes {
            for prop in &props {
                graph.remove_edge(class, prop);
            }
        }
        let mut subjects: Vec<Iri> = classes.iter().cloned().collect();
        subjects.extend(props.iter().cloned());
        findings.push(Finding::new(
            "property_clump",
            subjects,
            format!(
                "{m} classes share the same {n} properties; extract an abstract class composing them"
            ),
        ));
    }

    LeafResult::new(ids::PROPERTY_CLUMPS, price.clamp(0.0, 1.0), findings)
}

/// Leaf classes without instances and leaf properties that are never used.
pub fn check_lazy_entities(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut leaves = 0usize;
    let mut lazy = 0usize;

    for class in ontology.classes() {
        if !ontology.direct_subclasses(class).expect("declared").is_empty() {
            continue;
        }
        leaves += 1;
        if ontology.instances_of(class, InstanceMode::Direct).expect("declared").is_empty() {
            lazy += 1;
            findings.push(Finding::new(
                "lazy_class",
                alloc::vec![class.clone()],
                format!("leaf class <{class}> has no instances; populate, generalize or remove it"),
            ));
        }
    }

    let sub_properties: BTreeSet<&Iri> = ontology
        .axioms()
        .iter()
        .filter_map(|ax| match ax {
            Axiom::SubPropertyOf { sup, .. } => Some(sup),
            _ => None,
        })
        .collect();
    let used_properties: BTreeSet<&Iri> = ontology
        .axioms()
        .iter()
        .filter_map(|ax| match ax {
            Axiom::PropertyAssertion { property, .. } => Some(property),
            _ => None,
        })
        .collect();
    for property in ontology.properties() {
        if sub_properties.contains(property) {
            continue; // not a leaf
        }
        leaves += 1;
        if !used_properties.contains(property) {
            lazy += 1;
            findings.push(Finding::new(
                "lazy_property",
                alloc::vec![property.clone()],
                format!("leaf property <{property}> is never asserted; use, generalize or remove it"),
            ));
        }
    }

    LeafResult::new(ids::LAZY_ENTITIES, penalty_ratio(lazy, leaves), findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AssertionValue, Literal, OntologyBuilder};

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

    fn label(c: &str) -> Axiom {
        Axiom::Label { subject: iri(c), literal: Literal::tagged(c, "en") }
    }

    /// Canonical trace: annotated top and bottom, three bare pass-through
    /// classes between them, four SubClassOf axioms in total.
    fn chain_fixture() -> OntologyBuilder {
        let mut b = builder(&["Top", "D1", "D2", "D3", "Bottom"]);
        b.axiom(sub("D1", "Top"));
        b.axiom(sub("D2", "D1"));
        b.axiom(sub("D3", "D2"));
        b.axiom(sub("Bottom", "D3"));
        b.axiom(label("Top"));
        b.axiom(label("Bottom"));
        b
    }

    #[test]
    fn chain_of_three_intermediates_costs_three_quarters() {
        let result = find_chain_of_inheritance(&chain_fixture().build().unwrap());
        assert!((result.score - 0.25).abs() < 1e-12);
        assert_eq!(result.findings.len(), 1);
        let subjects = &result.findings[0].subjects;
        assert_eq!(subjects[0], iri("Top"));
        assert_eq!(subjects[1], iri("Bottom"));
        assert_eq!(&subjects[2..], &[iri("D1"), iri("D2"), iri("D3")]);
    }

    #[test]
    fn annotating_an_intermediate_breaks_the_chain() {
        let mut b = chain_fixture();
        b.axiom(label("D2"));
        // D1 and D3 become 1-long runs whose neighbors terminate them
        let result = find_chain_of_inheritance(&b.build().unwrap());
        assert!((result.score - 0.5).abs() < 1e-12);
    }

    #[test]
    fn extra_superclass_breaks_pass_through() {
        let mut b = chain_fixture();
        b.class("http://example.org/Other").unwrap();
        b.axiom(sub("D2", "Other"));
        b.axiom(label("Other"));
        // D2 now has two superclasses: runs [D1] and [D3] remain, but D2 is
        // not described, so neither run has valid endpoints on both sides
        let result = find_chain_of_inheritance(&b.build().unwrap());
        assert_eq!(result.score, 1.0);
    }

    #[test]
    fn fully_annotated_hierarchy_has_no_chains() {
        let mut b = builder(&["A", "B", "C"]);
        b.axiom(sub("B", "A"));
        b.axiom(sub("C", "B"));
        for c in ["A", "B", "C"] {
            b.axiom(label(c));
        }
        assert_eq!(find_chain_of_inheritance(&b.build().unwrap()).score, 1.0);
    }

    /// Canonical trace: 3 classes sharing the same 3 properties, 3 total
    /// properties, one clump of price 1 - (9-6)/3 = 0.
    #[test]
    fn three_by_three_clump_zeroes_the_price() {
        let mut b = builder(&["C1", "C2", "C3"]);
        for p in ["p1", "p2", "p3"] {
            b.object_property(alloc::format!("http://example.org/{p}")).unwrap();
            for c in ["C1", "C2", "C3"] {
                b.axiom(Axiom::Domain { property: iri(p), class: iri(c) });
            }
        }
        let result = find_property_clumps(&b.build().unwrap());
        assert_eq!(result.score, 0.0);
        assert_eq!(result.findings.len(), 1);
        assert_eq!(result.findings[0].subjects.len(), 6);
    }

    #[test]
    fn two_by_two_biclique_is_not_a_clump() {
        let mut b = builder(&["C1", "C2"]);
        for p in ["p1", "p2"] {
            b.object_property(alloc::format!("http://example.org/{p}")).unwrap();
            for c in ["C1", "C2"] {
                b.axiom(Axiom::Domain { property: iri(p), class: iri(c) });
            }
        }
        let result = find_property_clumps(&b.build().unwrap());
        assert_eq!(result.score, 1.0);
        assert!(result.findings.is_empty());
    }

    #[test]
    fn unshared_properties_are_clean() {
        let mut b = builder(&["C1", "C2"]);
        b.object_property("http://example.org/p1").unwrap();
        b.object_property("http://example.org/p2").unwrap();
        b.axiom(Axiom::Domain { property: iri("p1"), class: iri("C1") });
        b.axiom(Axiom::Domain { property: iri("p2"), class: iri("C2") });
        assert_eq!(find_property_clumps(&b.build().unwrap()).score, 1.0);
    }

    #[test]
    fn lazy_leaf_class_vs_populated_leaf() {
        let mut b = builder(&["A", "B", "C"]);
        b.individual("http://example.org/x").unwrap();
        b.axiom(sub("B", "A"));
        b.axiom(sub("C", "A"));
        b.axiom(Axiom::TypeAssertion { individual: iri("x"), class: iri("B") });
        // leaves are B (populated) and C (lazy)
        let result = check_lazy_entities(&b.build().unwrap());
        assert_eq!(result.score, 0.5);
        assert_eq!(result.findings[0].kind, "lazy_class");
        assert_eq!(result.findings[0].subjects, alloc::vec![iri("C")]);
    }

    #[test]
    fn unused_leaf_property_is_lazy() {
        let mut b = OntologyBuilder::new();
        b.object_property("http://example.org/p").unwrap();
        b.individual("http://example.org/x").unwrap();
        b.individual("http://example.org/y").unwrap();
        b.object_property("http://example.org/q").unwrap();
        b.axiom(Axiom::PropertyAssertion {
            subject: iri("x"),
            property: iri("p"),
            value: AssertionValue::Individual(iri("y")),
        });
        let result = check_lazy_entities(&b.build().unwrap());
        assert_eq!(result.score, 0.5);
        assert_eq!(result.findings[0].kind, "lazy_property");
    }
}
