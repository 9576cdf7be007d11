//! Derived graph structures shared by the semantic checks: hierarchy
//! digraphs, the undirected concept graph, cycle detection via strongly
//! connected components, transitive closure and maximal biclique enumeration
//! on the class-property bipartite graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::model::{Axiom, Iri, Ontology};

/// Directed graph over IRIs. Edge endpoints are always nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Digraph {
    nodes: BTreeSet<Iri>,
    edges: BTreeSet<(Iri, Iri)>,
}

impl Digraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, node: Iri) {
        self.nodes.insert(node);
    }

    pub fn add_edge(&mut self, from: Iri, to: Iri) {
        self.nodes.insert(from.clone());
        self.nodes.insert(to.clone());
        self.edges.insert((from, to));
    }

    pub fn nodes(&self) -> &BTreeSet<Iri> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(Iri, Iri)> {
        &self.edges
    }

    fn successors(&self) -> BTreeMap<&Iri, Vec<&Iri>> {
        let mut map: BTreeMap<&Iri, Vec<&Iri>> = BTreeMap::new();
        for node in &self.nodes {
            map.entry(node).or_default();
        }
        for (from, to) in &self.edges {
            map.entry(from).or_default().push(to);
        }
        map
    }

    /// Strongly connected components of size >= 2 plus self-loop singletons:
    /// exactly the node sets lying on some directed cycle, whatever its
    /// length.
    pub fn cycles(&self) -> Vec<BTreeSet<Iri>> {
        let sccs = self.strongly_connected_components();
        sccs.into_iter()
            .filter(|scc| {
                scc.len() >= 2 || {
                    let node = scc.iter().next().expect("non-empty scc");
                    self.edges.contains(&(node.clone(), node.clone()))
                }
            })
            .collect()
    }

    /// Iterative Tarjan, deterministic (nodes and successors visited in IRI
    /// order). Components are returned sorted by their smallest member.
    pub fn strongly_connected_components(&self) -> Vec<BTreeSet<Iri>> {
        let succ = self.successors();
        let mut index: BTreeMap<&Iri, usize> = BTreeMap::new();
        let mut lowlink: BTreeMap<&Iri, usize> = BTreeMap::new();
        let mut on_stack: BTreeSet<&Iri> = BTreeSet::new();
        let mut stack: Vec<&Iri> = Vec::new();
        let mut next_index = 0usize;
        let mut components: Vec<BTreeSet<Iri>> = Vec::new();

        enum Frame<'a> {
            Visit(&'a Iri),
            PostEdge(&'a Iri, &'a Iri),
            Finish(&'a Iri),
        }

        for start in &self.nodes {
            if index.contains_key(start) {
                continue;
            }
            let mut work = Vec::new();
            work.push(Frame::Visit(start));
            while let Some(frame) = work.pop() {
                match frame {
                    Frame::Visit(v) => {
                        if index.contains_key(v) {
                            continue;
                        }
                        index.insert(v, next_index);
                        lowlink.insert(v, next_index);
                        next_index += 1;
                        stack.push(v);
                        on_stack.insert(v);
                        work.push(Frame::Finish(v));
                        // reversed so successors are processed in IRI order
                        for w in succ[v].iter().rev() {
                            work.push(Frame::PostEdge(v, w));
                            work.push(Frame::Visit(w));
                        }
                    }
                    Frame::PostEdge(v, w) => {
                        if on_stack.contains(w) {
                            let low = lowlink[v].min(lowlink[w]);
                            lowlink.insert(v, low);
                        }
                    }
                    Frame::Finish(v) => {
                        if lowlink[v] == index[v] {
                            let mut component = BTreeSet::new();
                            while let Some(w) = stack.pop() {
                                on_stack.remove(w);
                                component.insert(w.clone());
                                if w == v {
                                    break;
                                }
                            }
                            components.push(component);
                        }
                    }
                }
            }
        }
        components.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        components
    }

    /// Transitive closure: `(a, b)` is present iff a path of one or more
    /// edges leads from `a` to `b`.
    pub fn reachability(&self) -> BTreeSet<(Iri, Iri)> {
        let succ = self.successors();
        let mut closure = BTreeSet::new();
        for start in &self.nodes {
            let mut seen: BTreeSet<&Iri> = BTreeSet::new();
            let mut stack: Vec<&Iri> = succ[start].clone();
            while let Some(node) = stack.pop() {
                if seen.insert(node) {
                    closure.insert((start.clone(), node.clone()));
                    stack.extend(succ[node].iter());
                }
            }
        }
        closure
    }

    /// True when a path of one or more edges from `from` reaches `to`.
    pub fn reaches(&self, from: &Iri, to: &Iri) -> bool {
        let succ = self.successors();
        if !self.nodes.contains(from) || !self.nodes.contains(to) {
            return false;
        }
        let mut seen: BTreeSet<&Iri> = BTreeSet::new();
        let mut stack: Vec<&Iri> = succ[from].clone();
        while let Some(node) = stack.pop() {
            if node == to {
                return true;
            }
            if seen.insert(node) {
                stack.extend(succ[node].iter());
            }
        }
        false
    }
}

/// Undirected graph over IRIs, used for concept connectivity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UndirectedGraph {
    nodes: BTreeSet<Iri>,
    edges: BTreeSet<(Iri, Iri)>,
}

impl UndirectedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, node: Iri) {
        self.nodes.insert(node);
    }

    pub fn add_edge(&mut self, a: Iri, b: Iri) {
        self.nodes.insert(a.clone());
        self.nodes.insert(b.clone());
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.edges.insert((a, b));
    }

    pub fn nodes(&self) -> &BTreeSet<Iri> {
        &self.nodes
    }

    /// Connected components, sorted by smallest member.
    pub fn connected_components(&self) -> Vec<BTreeSet<Iri>> {
        let mut adjacency: BTreeMap<&Iri, Vec<&Iri>> = BTreeMap::new();
        for node in &self.nodes {
            adjacency.entry(node).or_default();
        }
        for (a, b) in &self.edges {
            adjacency.entry(a).or_default().push(b);
            adjacency.entry(b).or_default().push(a);
        }
        let mut seen: BTreeSet<&Iri> = BTreeSet::new();
        let mut components = Vec::new();
        for start in &self.nodes {
            if seen.contains(start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut stack = alloc::vec![start];
            while let Some(node) = stack.pop() {
                if seen.insert(node) {
                    component.insert(node.clone());
                    stack.extend(adjacency[node].iter());
                }
            }
            components.push(component);
        }
        components
    }
}

/// Bipartite class-property graph of the clump check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: BTreeSet<Iri>,
    right: BTreeSet<Iri>,
    edges: BTreeSet<(Iri, Iri)>,
}

/// Guard against pathological closure blowup during biclique enumeration;
/// hundreds of entities stay far below it.
pub const DEFAULT_BICLIQUE_CANDIDATE_CAP: usize = 1 << 16;

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_left(&mut self, node: Iri) {
        self.left.insert(node);
    }

    pub fn add_right(&mut self, node: Iri) {
        self.right.insert(node);
    }

    pub fn add_edge(&mut self, left: Iri, right: Iri) {
        self.left.insert(left.clone());
        self.right.insert(right.clone());
        self.edges.insert((left, right));
    }

    pub fn remove_edge(&mut self, left: &Iri, right: &Iri) {
        self.edges.remove(&(left.clone(), right.clone()));
    }

    pub fn edges(&self) -> &BTreeSet<(Iri, Iri)> {
        &self.edges
    }

    pub fn has_edge(&self, left: &Iri, right: &Iri) -> bool {
        self.edges.contains(&(left.clone(), right.clone()))
    }

    fn neighborhoods(&self) -> BTreeMap<&Iri, BTreeSet<&Iri>> {
        let mut map: BTreeMap<&Iri, BTreeSet<&Iri>> = BTreeMap::new();
        for (l, r) in &self.edges {
            map.entry(l).or_default().insert(r);
        }
        map
    }

    /// Enumerates maximal complete bipartite subgraphs with at least
    /// `min_left` classes and `min_right` properties.
    ///
    /// Candidate property sets are the closure under pairwise intersection of
    /// the per-class neighborhoods; every maximal biclique's property side is
    /// such an intersection. `candidate_cap` bounds the closure size.
    pub fn enumerate_maximal_bicliques(
        &self,
        min_left: usize,
        min_right: usize,
    ) -> Vec<(BTreeSet<Iri>, BTreeSet<Iri>)> {
        self.enumerate_maximal_bicliques_capped(min_left, min_right, DEFAULT_BICLIQUE_CANDIDATE_CAP)
    }

    pub fn enumerate_maximal_bicliques_capped(
        &self,
        min_left: usize,
        min_right: usize,
        candidate_cap: usize,
    ) -> Vec<(BTreeSet<Iri>, BTreeSet<Iri>)> {
        let neighborhoods = self.neighborhoods();
        let mut candidates: BTreeSet<BTreeSet<&Iri>> = BTreeSet::new();
        for set in neighborhoods.values() {
            candidates.insert(set.clone());
        }
        // closure under pairwise intersection
        let mut worklist: Vec<BTreeSet<&Iri>> = candidates.iter().cloned().collect();
        while let Some(set) = worklist.pop() {
            if candidates.len() >= candidate_cap {
                break;
            }
            for other in neighborhoods.values() {
                let inter: BTreeSet<&Iri> = set.intersection(other).copied().collect();
                if inter.len() >= min_right && !candidates.contains(&inter) {
                    candidates.insert(inter.clone());
                    worklist.push(inter);
                }
            }
        }

        let mut result = Vec::new();
        let mut seen: BTreeSet<BTreeSet<Iri>> = BTreeSet::new();
        for props in candidates {
            if props.len() < min_right {
                continue;
            }
            let classes: BTreeSet<&Iri> = neighborhoods
                .iter()
                .filter(|(_, n)| props.is_subset(n))
                .map(|(c, _)| *c)
                .collect();
            if classes.len() < min_left {
                continue;
            }
            // maximal iff the property set is exactly the common neighborhood
            let common: BTreeSet<&Iri> = classes
                .iter()
                .map(|c| neighborhoods[*c].clone())
                .reduce(|a, b| a.intersection(&b).copied().collect())
                .unwrap_or_default();
            if common != props {
                continue;
            }
            let props_owned: BTreeSet<Iri> = props.into_iter().cloned().collect();
            if seen.insert(props_owned.clone()) {
                result.push((classes.into_iter().cloned().collect(), props_owned));
            }
        }
        result
    }
}

/// One node per class; one edge per asserted SubClassOf pair.
pub fn class_hierarchy_graph(ontology: &Ontology) -> Digraph {
    let mut graph = Digraph::new();
    for class in ontology.classes() {
        graph.add_node(class.clone());
    }
    for axiom in ontology.axioms() {
        if let Axiom::SubClassOf { sub, sup } = axiom {
            graph.add_edge(sub.clone(), sup.clone());
        }
    }
    graph
}

/// One node per property; one edge per asserted SubPropertyOf pair.
pub fn property_hierarchy_graph(ontology: &Ontology) -> Digraph {
    let mut graph = Digraph::new();
    for property in ontology.properties() {
        graph.add_node(property.clone());
    }
    for axiom in ontology.axioms() {
        if let Axiom::SubPropertyOf { sub, sup } = axiom {
            graph.add_edge(sub.clone(), sup.clone());
        }
    }
    graph
}

/// Undirected concept graph over classes: subclass pairs, object properties
/// bridging their domain and range classes, and equivalence/disjointness
/// pairs all contribute edges.
pub fn concept_graph(ontology: &Ontology) -> UndirectedGraph {
    let mut graph = UndirectedGraph::new();
    for class in ontology.classes() {
        graph.add_node(class.clone());
    }
    for axiom in ontology.axioms() {
        match axiom {
            Axiom::SubClassOf { sub, sup } => graph.add_edge(sub.clone(), sup.clone()),
            Axiom::EquivalentClasses { a, b } | Axiom::DisjointClasses { a, b } => {
                graph.add_edge(a.clone(), b.clone())
            }
            _ => {}
        }
    }
    for property in ontology.object_properties() {
        for domain in ontology.domains_of(property) {
            for range in ontology.ranges_of(property) {
                if ontology.classes().contains(&range) && domain != range {
                    graph.add_edge(domain.clone(), range.clone());
                }
            }
        }
    }
    graph
}

/// Class-property bipartite graph: a class is linked to a property when that
/// property's asserted rdfs:domain is the class.
pub fn class_property_graph(ontology: &Ontology) -> BipartiteGraph {
    let mut graph = BipartiteGraph::new();
    for class in ontology.classes() {
        graph.add_left(class.clone());
    }
    for property in ontology.properties() {
        graph.add_right(property.clone());
    }
    for axiom in ontology.axioms() {
        if let Axiom::Domain { property, class } = axiom {
            graph.add_edge(class.clone(), property.clone());
        }
    }
    graph
}
