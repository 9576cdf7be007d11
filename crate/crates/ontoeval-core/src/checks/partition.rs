//! Partition checks: disjointness conflicts, external instances, inverse
//! properties, concept connectivity and the data-driven hierarchy-axiom
//! recommendation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{coverage_ratio, ids, penalty_ratio, Finding, LeafResult};
use crate::graph::concept_graph;
use crate::model::{Axiom, InstanceMode, Iri, Ontology};

fn disjoint_pairs(ontology: &Ontology) -> Vec<(&Iri, &Iri)> {
    ontology
        .axioms()
        .iter()
        .filter_map(|ax| match ax {
            Axiom::DisjointClasses { a, b } => Some((a, b)),
            _ => None,
        })
        .collect()
}

/// A class violates when two of its (transitive) superclasses are asserted
/// disjoint.
pub fn check_common_classes(ontology: &Ontology) -> LeafResult {
    let pairs = disjoint_pairs(ontology);
    let mut findings = Vec::new();
    let mut violating = 0usize;
    for class in ontology.classes() {
        let supers = ontology.superclass_closure(class);
        if let Some((a, b)) =
            pairs.iter().find(|(a, b)| supers.contains(a) && supers.contains(b))
        {
            violating += 1;
            findings.push(Finding::new(
                "common_class",
                alloc::vec![class.clone(), (*a).clone(), (*b).clone()],
                format!("<{class}> is subsumed by the disjoint classes <{a}> and <{b}>"),
            ));
        }
    }
    let score = penalty_ratio(violating, ontology.classes().len());
    LeafResult::new(ids::COMMON_CLASSES, score, findings)
}

/// An individual violates when it is a member (directly or via subclass
/// inheritance) of two asserted-disjoint classes.
pub fn check_common_instances(ontology: &Ontology) -> LeafResult {
    let pairs = disjoint_pairs(ontology);
    let mut findings = Vec::new();
    let mut violating = 0usize;
    for individual in ontology.individuals() {
        let types = ontology.inherited_types(individual);
        if let Some((a, b)) = pairs.iter().find(|(a, b)| types.contains(a) && types.contains(b)) {
            violating += 1;
            findings.push(Finding::new(
                "common_instance",
                alloc::vec![individual.clone(), (*a).clone(), (*b).clone()],
                format!("<{individual}> is a member of the disjoint classes <{a}> and <{b}>"),
            ));
        }
    }
    let score = penalty_ratio(violating, ontology.individuals().len());
    LeafResult::new(ids::COMMON_INSTANCES, score, findings)
}

/// Direct instances of a decomposed class that belong to none of its
/// subclasses.
pub fn check_external_instances(ontology: &Ontology) -> LeafResult {
    let mut findings = Vec::new();
    let mut external: BTreeSet<&Iri> = BTreeSet::new();
    for class in ontology.classes() {
        let subclasses = ontology.direct_subclasses(class).expect("class is declared");
        if subclasses.is_empty() {
            continue;
        }
        let direct = ontology.instances_of(class, InstanceMode::Direct).expect("declared");
        for individual in ontology.individuals() {
            if !direct.contains(individual) {
                continue;
            }
            // inherited types contain every superclass of an asserted type,
            // so membership in a subclass or any of its descendants shows up
            let types = ontology.inherited_types(individual);
            let in_subclass = subclasses.iter().any(|sub| types.contains(sub));
            if !in_subclass {
                external.insert(individual);
                findings.push(Finding::new(
                    "external_instance",
                    alloc::vec![individual.clone(), class.clone()],
                    format!(
                        "<{individual}> is a direct member of <{class}> but of none of its subclasses"
                    ),
                ));
            }
        }
    }
    let score = penalty_ratio(external.len(), ontology.individuals().len());
    LeafResult::new(ids::EXTERNAL_INSTANCES, score, findings)
}

/// Share of object properties participating in an owl:inverseOf axiom.
pub fn check_inverse_properties(ontology: &Ontology) -> LeafResult {
    let mut with_inverse: BTreeSet<&Iri> = BTreeSet::new();
    for axiom in ontology.axioms() {
        if let Axiom::InverseOf { a, b } = axiom {
            with_inverse.insert(a);
            with_inverse.insert(b);
        }
    }
    let mut findings = Vec::new();
    for property in ontology.object_properties() {
        if !with_inverse.contains(property) {
            findings.push(Finding::new(
                "missing_inverse",
                alloc::vec![property.clone()],
                format!("define an inverse property for <{property}>"),
            ));
        }
    }
    let score = coverage_ratio(
        ontology.object_properties().len() - findings.len(),
        ontology.object_properties().len(),
    );
    LeafResult::new(ids::INVERSE_PROPERTIES, score, findings)
}

/// Size of the largest connected component of the concept graph relative to
/// the number of classes; isolated parts are reported.
pub fn check_path_existence(ontology: &Ontology) -> LeafResult {
    if ontology.classes().len() <= 1 {
        return LeafResult::new(ids::PATH_EXISTENCE, 1.0, Vec::new());
    }
    let graph = concept_graph(ontology);
    let mut components = graph.connected_components();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let largest = components.first().map(|c| c.len()).unwrap_or(0);
    let findings = components
        .iter()
        .skip(1)
        .map(|component| {
            let members: Vec<Iri> = component.iter().cloned().collect();
            Finding::new(
                "disconnected_component",
                members,
                "connect this isolated group of classes to the rest of the ontology",
            )
        })
        .collect();
    let score = coverage_ratio(largest, ontology.classes().len());
    LeafResult::new(ids::PATH_EXISTENCE, score, findings)
}

/// All unordered sibling pairs: two distinct direct subclasses of a common
/// parent.
pub fn sibling_pairs(ontology: &Ontology) -> BTreeSet<(Iri, Iri)> {
    let mut pairs = BTreeSet::new();
    for parent in ontology.classes() {
        let children: Vec<Iri> =
            ontology.direct_subclasses(parent).expect("declared").into_iter().collect();
        for (i, a) in children.iter().enumerate() {
            for b in children.iter().skip(i + 1) {
                let (x, y) = if a <= b { (a, b) } else { (b, a) };
                pairs.insert((x.clone(), y.clone()));
            }
        }
    }
    pairs
}

/// Data-driven disjointness recommendation over sibling pairs: both siblings
/// populated, their inherited instance sets do not intersect, and no
/// disjointness is asserted yet. Sibling pairs with identical non-empty
/// extensions additionally yield informational equivalence candidates that do
/// not affect the price.
pub fn recommend_disjoint_axioms(ontology: &Ontology) -> LeafResult {
    let pairs = sibling_pairs(ontology);
    let mut findings = Vec::new();
    let mut recommended = 0usize;
    for (a, b) in &pairs {
        let instances_a = ontology.instances_of(a, InstanceMode::Inherited).expect("declared");
        let instances_b = ontology.instances_of(b, InstanceMode::Inherited).expect("declared");
        if instances_a.is_empty() || instances_b.is_empty() {
            continue;
        }
        if instances_a.is_disjoint(&instances_b) {
            if !ontology.are_asserted_disjoint(a, b) {
                recommended += 1;
                findings.push(Finding::new(
                    "disjoint_candidate",
                    alloc::vec![a.clone(), b.clone()],
                    format!("assert owl:disjointWith between <{a}> and <{b}>"),
                ));
            }
        } else if instances_a == instances_b {
            let probe = Axiom::EquivalentClasses { a: a.clone(), b: b.clone() }.normalized();
            if !ontology.axioms().contains(&probe) {
                findings.push(Finding::new(
                    "equivalence_candidate",
                    alloc::vec![a.clone(), b.clone()],
                    format!("<{a}> and <{b}> share the same instances, consider owl:equivalentClass"),
                ));
            }
        }
    }
    let score = penalty_ratio(recommended, pairs.len());
    LeafResult::new(ids::HIERARCHY_RECOMMENDATION, score, findings)
}
