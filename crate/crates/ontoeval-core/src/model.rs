//! Immutable in-memory ontology snapshot: TBox (classes and class axioms),
//! RBox (properties and property axioms) and ABox (individuals and
//! assertions), plus the query helpers every semantic check builds on.
//!
//! A snapshot is constructed through [`OntologyBuilder`] (the parser and the
//! test generators both go through it) and never mutated afterwards, so it is
//! safe to share across concurrently running checks.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// XSD namespace; datatype IRIs in this namespace are accepted as ranges of
/// data properties without being declared.
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";

/// Absolute IRI used as the identity key of entities and individuals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    /// Creates an IRI. Empty strings are not valid identities.
    pub fn new(value: impl Into<String>) -> Self {
        let value = value.into();
        debug_assert!(!value.is_empty(), "IRI must be non-empty");
        Iri(value)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True for IRIs in the XSD namespace (opaque datatypes).
    pub fn is_xsd_datatype(&self) -> bool {
        self.0.starts_with(XSD_NS)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Iri {
    fn from(s: &str) -> Self {
        Iri::new(s)
    }
}

/// Kind of a schema-level entity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
}

/// What an IRI is declared as. Punning is forbidden: one IRI, one kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Declaration {
    Class,
    ObjectProperty,
    DataProperty,
    Individual,
}

impl fmt::Display for Declaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Declaration::Class => "class",
            Declaration::ObjectProperty => "object property",
            Declaration::DataProperty => "data property",
            Declaration::Individual => "individual",
        };
        f.write_str(s)
    }
}

/// Opaque literal value with an optional language tag. No datatype reasoning.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub value: String,
    pub lang: Option<String>,
}

impl Literal {
    pub fn plain(value: impl Into<String>) -> Self {
        Literal { value: value.into(), lang: None }
    }

    pub fn tagged(value: impl Into<String>, lang: impl Into<String>) -> Self {
        Literal { value: value.into(), lang: Some(lang.into()) }
    }

    /// English means tagged `en` (or a regional variant) or untagged.
    pub fn is_english(&self) -> bool {
        match &self.lang {
            None => true,
            Some(tag) => tag == "en" || tag.starts_with("en-"),
        }
    }
}

/// Object position of a property assertion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AssertionValue {
    Individual(Iri),
    Literal(Literal),
}

/// Asserted axiom. Symmetric kinds (equivalence, disjointness, inverse) are
/// stored as a normalized ordered pair and queried both ways.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    SubClassOf { sub: Iri, sup: Iri },
    EquivalentClasses { a: Iri, b: Iri },
    DisjointClasses { a: Iri, b: Iri },
    SubPropertyOf { sub: Iri, sup: Iri },
    EquivalentProperties { a: Iri, b: Iri },
    InverseOf { a: Iri, b: Iri },
    Domain { property: Iri, class: Iri },
    Range { property: Iri, range: Iri },
    TypeAssertion { individual: Iri, class: Iri },
    PropertyAssertion { subject: Iri, property: Iri, value: AssertionValue },
    MinCardinality { class: Iri, property: Iri, count: u32 },
    MaxCardinality { class: Iri, property: Iri, count: u32 },
    Label { subject: Iri, literal: Literal },
    Comment { subject: Iri, literal: Literal },
}

impl Axiom {
    /// Normalizes symmetric kinds into ordered pairs.
    pub fn normalized(self) -> Axiom {
        fn order(a: Iri, b: Iri) -> (Iri, Iri) {
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        }
        match self {
            Axiom::EquivalentClasses { a, b } => {
                let (a, b) = order(a, b);
                Axiom::EquivalentClasses { a, b }
            }
            Axiom::DisjointClasses { a, b } => {
                let (a, b) = order(a, b);
                Axiom::DisjointClasses { a, b }
            }
            Axiom::EquivalentProperties { a, b } => {
                let (a, b) = order(a, b);
                Axiom::EquivalentProperties { a, b }
            }
            Axiom::InverseOf { a, b } => {
                let (a, b) = order(a, b);
                Axiom::InverseOf { a, b }
            }
            other => other,
        }
    }

    /// The IRIs this axiom is asserted about: one for directed kinds, both
    /// operands for symmetric kinds.
    pub fn subjects(&self) -> Vec<&Iri> {
        match self {
            Axiom::SubClassOf { sub, .. } | Axiom::SubPropertyOf { sub, .. } => {
                [sub].into_iter().collect()
            }
            Axiom::EquivalentClasses { a, b }
            | Axiom::DisjointClasses { a, b }
            | Axiom::EquivalentProperties { a, b }
            | Axiom::InverseOf { a, b } => [a, b].into_iter().collect(),
            Axiom::Domain { property, .. } | Axiom::Range { property, .. } => {
                [property].into_iter().collect()
            }
            Axiom::TypeAssertion { individual, .. } => [individual].into_iter().collect(),
            Axiom::PropertyAssertion { subject, .. }
            | Axiom::Label { subject, .. }
            | Axiom::Comment { subject, .. } => [subject].into_iter().collect(),
            Axiom::MinCardinality { class, .. } | Axiom::MaxCardinality { class, .. } => {
                [class].into_iter().collect()
            }
        }
    }

    /// Hierarchy axioms are the ones the redundancy check inspects.
    pub fn is_hierarchy(&self) -> bool {
        matches!(
            self,
            Axiom::SubClassOf { .. } | Axiom::SubPropertyOf { .. } | Axiom::TypeAssertion { .. }
        )
    }

    pub fn is_annotation(&self) -> bool {
        matches!(self, Axiom::Label { .. } | Axiom::Comment { .. })
    }

    /// Rewrites every occurrence of `subject` to `placeholder`, used by the
    /// identical-formal-definition check.
    pub fn with_placeholder(&self, subject: &Iri, placeholder: &Iri) -> Axiom {
        let swap = |iri: &Iri| -> Iri {
            if iri == subject {
                placeholder.clone()
            } else {
                iri.clone()
            }
        };
        match self {
            Axiom::SubClassOf { sub, sup } => Axiom::SubClassOf { sub: swap(sub), sup: swap(sup) },
            Axiom::EquivalentClasses { a, b } => {
                Axiom::EquivalentClasses { a: swap(a), b: swap(b) }.normalized()
            }
            Axiom::DisjointClasses { a, b } => {
                Axiom::DisjointClasses { a: swap(a), b: swap(b) }.normalized()
            }
            Axiom::SubPropertyOf { sub, sup } => {
                Axiom::SubPropertyOf { sub: swap(sub), sup: swap(sup) }
            }
            Axiom::EquivalentProperties { a, b } => {
                Axiom::EquivalentProperties { a: swap(a), b: swap(b) }.normalized()
            }
            Axiom::InverseOf { a, b } => Axiom::InverseOf { a: swap(a), b: swap(b) }.normalized(),
            Axiom::Domain { property, class } => {
                Axiom::Domain { property: swap(property), class: swap(class) }
            }
            Axiom::Range { property, range } => {
                Axiom::Range { property: swap(property), range: swap(range) }
            }
            Axiom::TypeAssertion { individual, class } => {
                Axiom::TypeAssertion { individual: swap(individual), class: swap(class) }
            }
            Axiom::PropertyAssertion { subject: s, property, value } => {
                let value = match value {
                    AssertionValue::Individual(i) => AssertionValue::Individual(swap(i)),
                    AssertionValue::Literal(l) => AssertionValue::Literal(l.clone()),
                };
                Axiom::PropertyAssertion { subject: swap(s), property: swap(property), value }
            }
            Axiom::MinCardinality { class, property, count } => Axiom::MinCardinality {
                class: swap(class),
                property: swap(property),
                count: *count,
            },
            Axiom::MaxCardinality { class, property, count } => Axiom::MaxCardinality {
                class: swap(class),
                property: swap(property),
                count: *count,
            },
            Axiom::Label { subject: s, literal } => {
                Axiom::Label { subject: swap(s), literal: literal.clone() }
            }
            Axiom::Comment { subject: s, literal } => {
                Axiom::Comment { subject: swap(s), literal: literal.clone() }
            }
        }
    }
}

/// Error raised while assembling a snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Same IRI declared with two different kinds (punning is forbidden).
    KindConflict { iri: Iri, existing: Declaration, attempted: Declaration },
    /// An axiom references an IRI that is not declared.
    UnknownIri(Iri),
    /// Subject/object kinds do not match the axiom kind.
    InvalidAxiom { axiom: Axiom, reason: String },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::KindConflict { iri, existing, attempted } => write!(
                f,
                "<{iri}> is already declared as {existing}, cannot redeclare as {attempted}"
            ),
            ModelError::UnknownIri(iri) => write!(f, "reference to undeclared IRI <{iri}>"),
            ModelError::InvalidAxiom { axiom, reason } => {
                write!(f, "invalid axiom {axiom:?}: {reason}")
            }
        }
    }
}

/// Lookup of an undeclared IRI in a query helper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookupError {
    pub iri: Iri,
}

impl fmt::Display for LookupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown IRI <{}>", self.iri)
    }
}

/// Whether instance queries follow the subclass hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceMode {
    Direct,
    Inherited,
}

/// Immutable ontology snapshot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ontology {
    classes: BTreeSet<Iri>,
    object_properties: BTreeSet<Iri>,
    data_properties: BTreeSet<Iri>,
    individuals: BTreeSet<Iri>,
    axioms: BTreeSet<Axiom>,
    /// Extra asserted copies beyond the first, kept for the
    /// hierarchy-redundancy check.
    duplicates: BTreeMap<Axiom, usize>,
}

impl Ontology {
    pub fn classes(&self) -> &BTreeSet<Iri> {
        &self.classes
    }

    pub fn object_properties(&self) -> &BTreeSet<Iri> {
        &self.object_properties
    }

    pub fn data_properties(&self) -> &BTreeSet<Iri> {
        &self.data_properties
    }

    /// Object and data properties together.
    pub fn properties(&self) -> impl Iterator<Item = &Iri> {
        self.object_properties.iter().chain(self.data_properties.iter())
    }

    pub fn property_count(&self) -> usize {
        self.object_properties.len() + self.data_properties.len()
    }

    pub fn individuals(&self) -> &BTreeSet<Iri> {
        &self.individuals
    }

    /// Collapsed axiom set (duplicates removed).
    pub fn axioms(&self) -> &BTreeSet<Axiom> {
        &self.axioms
    }

    /// Duplicate assertions beyond the first, per axiom.
    pub fn duplicates(&self) -> &BTreeMap<Axiom, usize> {
        &self.duplicates
    }

    /// How many times an axiom was asserted.
    pub fn multiplicity(&self, axiom: &Axiom) -> usize {
        if self.axioms.contains(axiom) {
            1 + self.duplicates.get(axiom).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Total asserted axioms including duplicate assertions.
    pub fn axiom_count(&self) -> usize {
        self.axioms.len() + self.duplicates.values().sum::<usize>()
    }

    pub fn declaration(&self, iri: &Iri) -> Option<Declaration> {
        if self.classes.contains(iri) {
            Some(Declaration::Class)
        } else if self.object_properties.contains(iri) {
            Some(Declaration::ObjectProperty)
        } else if self.data_properties.contains(iri) {
            Some(Declaration::DataProperty)
        } else if self.individuals.contains(iri) {
            Some(Declaration::Individual)
        } else {
            None
        }
    }

    pub fn is_declared(&self, iri: &Iri) -> bool {
        self.declaration(iri).is_some()
    }

    fn require_declared(&self, iri: &Iri) -> Result<(), LookupError> {
        if self.is_declared(iri) {
            Ok(())
        } else {
            Err(LookupError { iri: iri.clone() })
        }
    }

    /// Axioms asserted about an IRI: directed kinds match on their subject,
    /// symmetric kinds on either operand.
    pub fn asserted_axioms(&self, iri: &Iri) -> Result<Vec<&Axiom>, LookupError> {
        self.require_declared(iri)?;
        Ok(self.axioms.iter().filter(|ax| ax.subjects().contains(&iri)).collect())
    }

    /// Asserted axioms without `SubClassOf` (and without `SubPropertyOf` for
    /// properties); the pass-through test of the inheritance-chain check.
    pub fn asserted_non_sub_axioms(&self, iri: &Iri) -> Result<Vec<&Axiom>, LookupError> {
        Ok(self
            .asserted_axioms(iri)?
            .into_iter()
            .filter(|ax| !matches!(ax, Axiom::SubClassOf { .. } | Axiom::SubPropertyOf { .. }))
            .collect())
    }

    /// Direct asserted subclasses: all `D` with `SubClassOf(D, class)`.
    pub fn direct_subclasses(&self, class: &Iri) -> Result<BTreeSet<Iri>, LookupError> {
        self.require_declared(class)?;
        Ok(self
            .axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::SubClassOf { sub, sup } if sup == class => Some(sub.clone()),
                _ => None,
            })
            .collect())
    }

    pub fn direct_superclasses(&self, class: &Iri) -> Result<BTreeSet<Iri>, LookupError> {
        self.require_declared(class)?;
        Ok(self
            .axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::SubClassOf { sub, sup } if sub == class => Some(sup.clone()),
                _ => None,
            })
            .collect())
    }

    /// All classes reachable downwards from `class` via asserted SubClassOf,
    /// excluding `class` itself unless it lies on a cycle.
    pub fn subclass_closure(&self, class: &Iri) -> BTreeSet<Iri> {
        self.closure(class, |c| {
            self.axioms
                .iter()
                .filter_map(move |ax| match ax {
                    Axiom::SubClassOf { sub, sup } if sup == c => Some(sub.clone()),
                    _ => None,
                })
                .collect()
        })
    }

    /// All classes reachable upwards from `class` via asserted SubClassOf.
    pub fn superclass_closure(&self, class: &Iri) -> BTreeSet<Iri> {
        self.closure(class, |c| {
            self.axioms
                .iter()
                .filter_map(move |ax| match ax {
                    Axiom::SubClassOf { sub, sup } if sub == c => Some(sup.clone()),
                    _ => None,
                })
                .collect()
        })
    }

    fn closure(&self, start: &Iri, step: impl Fn(&Iri) -> Vec<Iri>) -> BTreeSet<Iri> {
        let mut seen = BTreeSet::new();
        let mut stack = step(start);
        while let Some(next) = stack.pop() {
            if seen.insert(next.clone()) {
                stack.extend(step(&next));
            }
        }
        seen
    }

    /// Asserted rdf:type classes of an individual.
    pub fn asserted_types(&self, individual: &Iri) -> BTreeSet<Iri> {
        self.axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::TypeAssertion { individual: i, class } if i == individual => {
                    Some(class.clone())
                }
                _ => None,
            })
            .collect()
    }

    /// Classes an individual belongs to: asserted types plus their
    /// superclass closure.
    pub fn inherited_types(&self, individual: &Iri) -> BTreeSet<Iri> {
        let mut result = BTreeSet::new();
        for class in self.asserted_types(individual) {
            result.extend(self.superclass_closure(&class));
            result.insert(class);
        }
        result
    }

    /// Individuals of a class, either directly asserted or inherited through
    /// the (transitive) subclass hierarchy.
    pub fn instances_of(
        &self,
        class: &Iri,
        mode: InstanceMode,
    ) -> Result<BTreeSet<Iri>, LookupError> {
        self.require_declared(class)?;
        let mut classes = BTreeSet::new();
        classes.insert(class.clone());
        if mode == InstanceMode::Inherited {
            classes.extend(self.subclass_closure(class));
        }
        Ok(self
            .axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::TypeAssertion { individual, class: c } if classes.contains(c) => {
                    Some(individual.clone())
                }
                _ => None,
            })
            .collect())
    }

    /// Asserted disjointness between two classes (either operand order).
    pub fn are_asserted_disjoint(&self, a: &Iri, b: &Iri) -> bool {
        let probe =
            Axiom::DisjointClasses { a: a.clone(), b: b.clone() }.normalized();
        self.axioms.contains(&probe)
    }

    /// Asserted domain classes of a property.
    pub fn domains_of(&self, property: &Iri) -> BTreeSet<Iri> {
        self.axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::Domain { property: p, class } if p == property => Some(class.clone()),
                _ => None,
            })
            .collect()
    }

    /// Asserted range IRIs of a property (classes or opaque datatypes).
    pub fn ranges_of(&self, property: &Iri) -> BTreeSet<Iri> {
        self.axioms
            .iter()
            .filter_map(|ax| match ax {
                Axiom::Range { property: p, range } if p == property => Some(range.clone()),
                _ => None,
            })
            .collect()
    }
}

/// Accumulates declarations and axioms, then validates the whole snapshot.
/// Declarations need not precede the axioms that use them.
#[derive(Debug, Default, Clone)]
pub struct OntologyBuilder {
    declarations: BTreeMap<Iri, Declaration>,
    axioms: Vec<Axiom>,
}

impl OntologyBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares an IRI. Redeclaration with the same kind is a no-op;
    /// a different kind is a punning conflict.
    pub fn declare(&mut self, iri: Iri, kind: Declaration) -> Result<(), ModelError> {
        match self.declarations.get(&iri) {
            Some(existing) if *existing != kind => Err(ModelError::KindConflict {
                iri,
                existing: *existing,
                attempted: kind,
            }),
            _ => {
                self.declarations.insert(iri, kind);
                Ok(())
            }
        }
    }

    pub fn class(&mut self, iri: impl Into<String>) -> Result<(), ModelError> {
        self.declare(Iri::new(iri), Declaration::Class)
    }

    pub fn object_property(&mut self, iri: impl Into<String>) -> Result<(), ModelError> {
        self.declare(Iri::new(iri), Declaration::ObjectProperty)
    }

    pub fn data_property(&mut self, iri: impl Into<String>) -> Result<(), ModelError> {
        self.declare(Iri::new(iri), Declaration::DataProperty)
    }

    pub fn individual(&mut self, iri: impl Into<String>) -> Result<(), ModelError> {
        self.declare(Iri::new(iri), Declaration::Individual)
    }

    pub fn declaration(&self, iri: &Iri) -> Option<Declaration> {
        self.declarations.get(iri).copied()
    }

    /// Queues an axiom; validation happens in [`OntologyBuilder::build`].
    pub fn axiom(&mut self, axiom: Axiom) -> &mut Self {
        self.axioms.push(axiom);
        self
    }

    fn kind_of(&self, iri: &Iri) -> Result<Declaration, ModelError> {
        self.declarations
            .get(iri)
            .copied()
            .ok_or_else(|| ModelError::UnknownIri(iri.clone()))
    }

    fn expect(
        &self,
        axiom: &Axiom,
        iri: &Iri,
        wanted: &[Declaration],
        role: &str,
    ) -> Result<Declaration, ModelError> {
        let kind = self.kind_of(iri)?;
        if wanted.contains(&kind) {
            Ok(kind)
        } else {
            Err(ModelError::InvalidAxiom {
                axiom: axiom.clone(),
                reason: alloc::format!("{role} <{iri}> is declared as {kind}"),
            })
        }
    }

    /// Position-aware callers (the parser) validate axioms one at a time to
    /// attach source locations to the errors.
    pub fn validate_axiom(&self, axiom: &Axiom) -> Result<(), ModelError> {
        self.validate(axiom)
    }

    fn validate(&self, axiom: &Axiom) -> Result<(), ModelError> {
        use Declaration as D;
        let props = [D::ObjectProperty, D::DataProperty];
        match axiom {
            Axiom::SubClassOf { sub, sup } => {
                self.expect(axiom, sub, &[D::Class], "subclass")?;
                self.expect(axiom, sup, &[D::Class], "superclass")?;
            }
            Axiom::EquivalentClasses { a, b } | Axiom::DisjointClasses { a, b } => {
                self.expect(axiom, a, &[D::Class], "class")?;
                self.expect(axiom, b, &[D::Class], "class")?;
                if a == b {
                    return Err(ModelError::InvalidAxiom {
                        axiom: axiom.clone(),
                        reason: "relates a class to itself".to_owned(),
                    });
                }
            }
            Axiom::SubPropertyOf { sub, sup } => {
                let k1 = self.expect(axiom, sub, &props, "subproperty")?;
                let k2 = self.expect(axiom, sup, &props, "superproperty")?;
                if k1 != k2 {
                    return Err(ModelError::InvalidAxiom {
                        axiom: axiom.clone(),
                        reason: "mixes object and data properties".to_owned(),
                    });
                }
            }
            Axiom::EquivalentProperties { a, b } => {
                let k1 = self.expect(axiom, a, &props, "property")?;
                let k2 = self.expect(axiom, b, &props, "property")?;
                if k1 != k2 {
                    return Err(ModelError::InvalidAxiom {
                        axiom: axiom.clone(),
                        reason: "mixes object and data properties".to_owned(),
                    });
                }
                if a == b {
                    return Err(ModelError::InvalidAxiom {
                        axiom: axiom.clone(),
                        reason: "relates a property to itself".to_owned(),
                    });
                }
            }
            Axiom::InverseOf { a, b } => {
                self.expect(axiom, a, &[D::ObjectProperty], "property")?;
                self.expect(axiom, b, &[D::ObjectProperty], "property")?;
            }
            Axiom::Domain { property, class } => {
                self.expect(axiom, property, &props, "property")?;
                self.expect(axiom, class, &[D::Class], "domain")?;
            }
            Axiom::Range { property, range } => {
                let kind = self.expect(axiom, property, &props, "property")?;
                if kind == D::DataProperty && range.is_xsd_datatype() {
                    // opaque datatype, accepted undeclared
                } else {
                    self.expect(axiom, range, &[D::Class], "range")?;
                }
            }
            Axiom::TypeAssertion { individual, class } => {
                self.expect(axiom, individual, &[D::Individual], "individual")?;
                self.expect(axiom, class, &[D::Class], "type")?;
            }
            Axiom::PropertyAssertion { subject, property, value } => {
                self.expect(axiom, subject, &[D::Individual], "subject")?;
                let kind = self.expect(axiom, property, &props, "property")?;
                match (kind, value) {
                    (D::ObjectProperty, AssertionValue::Individual(obj)) => {
                        self.expect(axiom, obj, &[D::Individual], "object")?;
                    }
                    (D::DataProperty, AssertionValue::Literal(_)) => {}
                    (D::ObjectProperty, AssertionValue::Literal(_)) => {
                        return Err(ModelError::InvalidAxiom {
                            axiom: axiom.clone(),
                            reason: "object property asserted with a literal value".to_owned(),
                        });
                    }
                    (D::DataProperty, AssertionValue::Individual(_)) => {
                        return Err(ModelError::InvalidAxiom {
                            axiom: axiom.clone(),
                            reason: "data property asserted with an individual value".to_owned(),
                        });
                    }
                    _ => unreachable!("property kind checked above"),
                }
            }
            Axiom::MinCardinality { class, property, .. }
            | Axiom::MaxCardinality { class, property, .. } => {
                self.expect(axiom, class, &[D::Class], "restricted class")?;
                self.expect(axiom, property, &props, "property")?;
            }
            Axiom::Label { subject, .. } | Axiom::Comment { subject, .. } => {
                self.kind_of(subject)?;
            }
        }
        Ok(())
    }

    /// Validates every queued axiom, collapses duplicates (keeping their
    /// count) and produces the immutable snapshot.
    pub fn build(&self) -> Result<Ontology, ModelError> {
        let mut ontology = Ontology::default();
        for (iri, kind) in &self.declarations {
            let set = match kind {
                Declaration::Class => &mut ontology.classes,
                Declaration::ObjectProperty => &mut ontology.object_properties,
                Declaration::DataProperty => &mut ontology.data_properties,
                Declaration::Individual => &mut ontology.individuals,
            };
            set.insert(iri.clone());
        }
        for axiom in &self.axioms {
            self.validate(axiom)?;
            let normalized = axiom.clone().normalized();
            if !ontology.axioms.insert(normalized.clone()) {
                *ontology.duplicates.entry(normalized).or_insert(0) += 1;
            }
        }
        Ok(ontology)
    }
}
