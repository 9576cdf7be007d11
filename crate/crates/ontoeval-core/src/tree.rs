//! The completeness condition tree: phases, weight profiles and the
//! recursive evaluation producing the OC score.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::checks::{ids, run_check, LeafResult};
use crate::model::Ontology;

/// ROD development phases, totally ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Phase {
    BusinessVocabulary,     // 2.1
    ExampleEnumeration,     // 2.2
    TaxonomyDefinition,     // 2.3
    AdHocRelations,         // 2.4
    DetailDescription,      // 2.5
    RestrictionsAndRules,   // 2.6
    PostDevelopment,
}

impl Phase {
    pub const ALL: [Phase; 7] = [
        Phase::BusinessVocabulary,
        Phase::ExampleEnumeration,
        Phase::TaxonomyDefinition,
        Phase::AdHocRelations,
        Phase::DetailDescription,
        Phase::RestrictionsAndRules,
        Phase::PostDevelopment,
    ];

    pub fn next(self) -> Option<Phase> {
        let idx = Phase::ALL.iter().position(|p| *p == self).expect("phase is listed");
        Phase::ALL.get(idx + 1).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::BusinessVocabulary => "2.1",
            Phase::ExampleEnumeration => "2.2",
            Phase::TaxonomyDefinition => "2.3",
            Phase::AdHocRelations => "2.4",
            Phase::DetailDescription => "2.5",
            Phase::RestrictionsAndRules => "2.6",
            Phase::PostDevelopment => "post-development",
        }
    }
}

impl core::fmt::Display for Phase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2.1" => Ok(Phase::BusinessVocabulary),
            "2.2" => Ok(Phase::ExampleEnumeration),
            "2.3" => Ok(Phase::TaxonomyDefinition),
            "2.4" => Ok(Phase::AdHocRelations),
            "2.5" => Ok(Phase::DetailDescription),
            "2.6" => Ok(Phase::RestrictionsAndRules),
            "post-development" | "post" => Ok(Phase::PostDevelopment),
            other => Err(format!("unknown phase `{other}` (expected 2.1–2.6 or post-development)")),
        }
    }
}

/// One node of the condition tree, identified by its slash-separated path.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionNode {
    pub path: String,
    /// Weight relative to the node's siblings; profiles may override it.
    pub default_weight: f64,
    pub body: NodeBody,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NodeBody {
    Aggregate(Vec<ConditionNode>),
    Leaf(&'static str),
}

impl ConditionNode {
    fn aggregate(path: &str, children: Vec<ConditionNode>) -> Self {
        ConditionNode {
            path: path.to_owned(),
            default_weight: 1.0,
            body: NodeBody::Aggregate(children),
        }
    }

    fn leaf(path: &str, check_id: &'static str) -> Self {
        ConditionNode { path: path.to_owned(), default_weight: 1.0, body: NodeBody::Leaf(check_id) }
    }

    /// Every node path in the subtree, pre-order.
    pub fn paths(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_paths(&mut out);
        out
    }

    fn collect_paths<'a>(&'a self, out: &mut Vec<&'a str>) {
        out.push(&self.path);
        if let NodeBody::Aggregate(children) = &self.body {
            for child in children {
                child.collect_paths(out);
            }
        }
    }

    /// All `(path, checkId)` leaves in the subtree, pre-order.
    pub fn leaves(&self) -> Vec<(&str, &'static str)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<(&'a str, &'static str)>) {
        match &self.body {
            NodeBody::Leaf(check_id) => out.push((&self.path, check_id)),
            NodeBody::Aggregate(children) => {
                for child in children {
                    child.collect_leaves(out);
                }
            }
        }
    }
}

/// The default tree: TBox / RBox / ABox components, each split into the
/// applicable sublevels, binding all seventeen checks exactly once. Weights
/// here are uniform; phase emphasis comes from the profiles.
pub fn default_tree() -> ConditionNode {
    ConditionNode::aggregate(
        "oc",
        alloc::vec![
            ConditionNode::aggregate(
                "oc/tbox",
                alloc::vec![
                    ConditionNode::aggregate(
                        "oc/tbox/description",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/tbox/description/entity_existence",
                                ids::ENTITY_EXISTENCE,
                            ),
                            ConditionNode::leaf("oc/tbox/description/nl", ids::NATURAL_LANGUAGE),
                        ],
                    ),
                    ConditionNode::aggregate(
                        "oc/tbox/partition",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/tbox/partition/common_classes",
                                ids::COMMON_CLASSES,
                            ),
                            ConditionNode::leaf(
                                "oc/tbox/partition/path_existence",
                                ids::PATH_EXISTENCE,
                            ),
                            ConditionNode::leaf(
                                "oc/tbox/partition/hierarchy_recommendation",
                                ids::HIERARCHY_RECOMMENDATION,
                            ),
                        ],
                    ),
                    ConditionNode::aggregate(
                        "oc/tbox/redundancy",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/tbox/redundancy/identical_definition",
                                ids::IDENTICAL_DEFINITION,
                            ),
                            ConditionNode::leaf(
                                "oc/tbox/redundancy/hierarchy",
                                ids::HIERARCHY_REDUNDANCY,
                            ),
                        ],
                    ),
                    ConditionNode::aggregate(
                        "oc/tbox/consistency",
                        alloc::vec![ConditionNode::leaf(
                            "oc/tbox/consistency/circulatory",
                            ids::CIRCULATORY_ERRORS,
                        )],
                    ),
                    ConditionNode::aggregate(
                        "oc/tbox/anomaly",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/tbox/anomaly/chain_of_inheritance",
                                ids::CHAIN_OF_INHERITANCE,
                            ),
                            ConditionNode::leaf(
                                "oc/tbox/anomaly/property_clumps",
                                ids::PROPERTY_CLUMPS,
                            ),
                            ConditionNode::leaf(
                                "oc/tbox/anomaly/lazy_entities",
                                ids::LAZY_ENTITIES,
                            ),
                        ],
                    ),
                ],
            ),
            ConditionNode::aggregate(
                "oc/rbox",
                alloc::vec![
                    ConditionNode::aggregate(
                        "oc/rbox/description",
                        alloc::vec![ConditionNode::leaf(
                            "oc/rbox/description/formal_tbox",
                            ids::FORMAL_TBOX,
                        )],
                    ),
                    ConditionNode::aggregate(
                        "oc/rbox/partition",
                        alloc::vec![ConditionNode::leaf(
                            "oc/rbox/partition/inverse_properties",
                            ids::INVERSE_PROPERTIES,
                        )],
                    ),
                ],
            ),
            ConditionNode::aggregate(
                "oc/abox",
                alloc::vec![
                    ConditionNode::aggregate(
                        "oc/abox/description",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/abox/description/instance_existence",
                                ids::INSTANCE_EXISTENCE,
                            ),
                            ConditionNode::leaf(
                                "oc/abox/description/formal_abox",
                                ids::FORMAL_ABOX,
                            ),
                        ],
                    ),
                    ConditionNode::aggregate(
                        "oc/abox/partition",
                        alloc::vec![
                            ConditionNode::leaf(
                                "oc/abox/partition/common_instances",
                                ids::COMMON_INSTANCES,
                            ),
                            ConditionNode::leaf(
                                "oc/abox/partition/external_instances",
                                ids::EXTERNAL_INSTANCES,
                            ),
                        ],
                    ),
                ],
            ),
        ],
    )
}

/// Per-phase weight assignment over tree node paths. Paths absent from the
/// map keep the tree's default weight; weights need not be pre-normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightProfile {
    pub phase: Phase,
    pub weights: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileError {
    UnknownPath(String),
    NegativeWeight(String),
    /// Every child of the named aggregate has weight zero.
    ZeroSiblingGroup(String),
}

impl core::fmt::Display for ProfileError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ProfileError::UnknownPath(p) => write!(f, "profile refers to unknown node `{p}`"),
            ProfileError::NegativeWeight(p) => write!(f, "negative weight on node `{p}`"),
            ProfileError::ZeroSiblingGroup(p) => {
                write!(f, "all children of `{p}` have weight zero")
            }
        }
    }
}

/// Sublevel emphasis per phase: (description, partition, redundancy,
/// consistency, anomaly). The numbers are this tool's defaults; only their
/// qualitative ordering across phases is essential.
const SUBLEVEL_WEIGHTS: [(Phase, [f64; 5]); 7] = [
    (Phase::BusinessVocabulary, [0.60, 0.40, 0.00, 0.00, 0.00]),
    (Phase::ExampleEnumeration, [0.55, 0.45, 0.00, 0.00, 0.00]),
    (Phase::TaxonomyDefinition, [0.30, 0.25, 0.15, 0.15, 0.15]),
    (Phase::AdHocRelations, [0.28, 0.27, 0.15, 0.15, 0.15]),
    (Phase::DetailDescription, [0.25, 0.22, 0.23, 0.15, 0.15]),
    (Phase::RestrictionsAndRules, [0.24, 0.21, 0.25, 0.15, 0.15]),
    (Phase::PostDevelopment, [0.25, 0.15, 0.30, 0.10, 0.20]),
];

const SUBLEVELS: [&str; 5] = ["description", "partition", "redundancy", "consistency", "anomaly"];

/// Component emphasis per phase: (tbox, rbox, abox). Early phases focus on
/// the schematic part; relations and instances gain weight later.
const COMPONENT_WEIGHTS: [(Phase, [f64; 3]); 7] = [
    (Phase::BusinessVocabulary, [0.70, 0.15, 0.15]),
    (Phase::ExampleEnumeration, [0.45, 0.15, 0.40]),
    (Phase::TaxonomyDefinition, [0.55, 0.15, 0.30]),
    (Phase::AdHocRelations, [0.40, 0.35, 0.25]),
    (Phase::DetailDescription, [0.40, 0.30, 0.30]),
    (Phase::RestrictionsAndRules, [0.40, 0.25, 0.35]),
    (Phase::PostDevelopment, [0.45, 0.25, 0.30]),
];

const COMPONENTS: [&str; 3] = ["tbox", "rbox", "abox"];

impl WeightProfile {
    /// The built-in profile for one phase.
    pub fn builtin(phase: Phase) -> WeightProfile {
        let (_, sublevel) = SUBLEVEL_WEIGHTS
            .iter()
            .find(|(p, _)| *p == phase)
            .expect("every phase has a table row");
        let (_, component_weights) = COMPONENT_WEIGHTS
            .iter()
            .find(|(p, _)| *p == phase)
            .expect("every phase has a table row");
        let mut weights = BTreeMap::new();
        for (component, cw) in COMPONENTS.iter().zip(component_weights.iter()) {
            weights.insert(format!("oc/{component}"), *cw);
            for (name, weight) in SUBLEVELS.iter().zip(sublevel.iter()) {
                weights.insert(format!("oc/{component}/{name}"), *weight);
            }
        }
        // prune sublevels the component does not have, so validation holds
        let tree = default_tree();
        let known: alloc::collections::BTreeSet<&str> = tree.paths().into_iter().collect();
        weights.retain(|path, _| known.contains(path.as_str()));
        WeightProfile { phase, weights }
    }

    /// This profile with `overrides` applied on top (overrides win).
    pub fn with_overrides(&self, overrides: &BTreeMap<String, f64>) -> WeightProfile {
        let mut weights = self.weights.clone();
        for (path, weight) in overrides {
            weights.insert(path.clone(), *weight);
        }
        WeightProfile { phase: self.phase, weights }
    }

    fn weight_of(&self, node: &ConditionNode) -> f64 {
        self.weights.get(&node.path).copied().unwrap_or(node.default_weight)
    }

    /// Checks the profile against a tree: no unknown paths, no negative
    /// weights, and no sibling group summing to zero.
    pub fn validate(&self, tree: &ConditionNode) -> Result<(), ProfileError> {
        let known: alloc::collections::BTreeSet<&str> = tree.paths().into_iter().collect();
        for (path, weight) in &self.weights {
            if !known.contains(path.as_str()) {
                return Err(ProfileError::UnknownPath(path.clone()));
            }
            if *weight < 0.0 || !weight.is_finite() {
                return Err(ProfileError::NegativeWeight(path.clone()));
            }
        }
        self.validate_groups(tree)
    }

    fn validate_groups(&self, node: &ConditionNode) -> Result<(), ProfileError> {
        let NodeBody::Aggregate(children) = &node.body else { return Ok(()) };
        let sum: f64 = children.iter().map(|c| self.weight_of(c)).sum();
        if sum <= 0.0 {
            return Err(ProfileError::ZeroSiblingGroup(node.path.clone()));
        }
        for child in children {
            if self.weight_of(child) > 0.0 {
                self.validate_groups(child)?;
            }
        }
        Ok(())
    }
}

/// All seven built-in profiles, keyed by phase.
pub fn builtin_profiles() -> BTreeMap<Phase, WeightProfile> {
    Phase::ALL.iter().map(|p| (*p, WeightProfile::builtin(*p))).collect()
}

/// `w'` per leaf path: the product of normalized sibling weights along the
/// root path. Leaves cut off by a zero weight get `w' = 0`; the rest sum
/// to 1.
pub fn relative_weights(
    tree: &ConditionNode,
    profile: &WeightProfile,
) -> Result<BTreeMap<String, f64>, ProfileError> {
    profile.validate(tree)?;
    let mut out = BTreeMap::new();
    collect_relative(tree, profile, 1.0, &mut out);
    Ok(out)
}

fn collect_relative(
    node: &ConditionNode,
    profile: &WeightProfile,
    product: f64,
    out: &mut BTreeMap<String, f64>,
) {
    match &node.body {
        NodeBody::Leaf(_) => {
            out.insert(node.path.clone(), product);
        }
        NodeBody::Aggregate(children) => {
            let sum: f64 = children.iter().map(|c| profile.weight_of(c)).sum();
            for child in children {
                let normalized = if sum > 0.0 { profile.weight_of(child) / sum } else { 0.0 };
                collect_relative(child, profile, product * normalized, out);
            }
        }
    }
}

/// Element counts reported alongside the OC score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ElementCounts {
    pub classes: usize,
    pub properties: usize,
    /// Axioms and rules, counting duplicate assertions.
    pub axioms: usize,
    pub individuals: usize,
}

impl ElementCounts {
    pub fn of(ontology: &Ontology) -> ElementCounts {
        ElementCounts {
            classes: ontology.classes().len(),
            properties: ontology.property_count(),
            axioms: ontology.axiom_count(),
            individuals: ontology.individuals().len(),
        }
    }
}

/// A fully evaluated tree.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub phase: Phase,
    /// Root price of the recursive evaluation, equals Σ w'·score.
    pub oc: f64,
    /// Price of every evaluated node; zero-weight subtrees are absent.
    pub per_node_price: BTreeMap<String, f64>,
    /// Normalized sibling weight of every node.
    pub node_weight: BTreeMap<String, f64>,
    /// Path product of normalized weights for every node (w' at leaves).
    pub relative_weight: BTreeMap<String, f64>,
    pub leaf_results: BTreeMap<String, LeafResult>,
    /// checkId → leaf path, for reverse lookups.
    pub leaf_paths: BTreeMap<String, String>,
    pub element_counts: ElementCounts,
}

impl EvaluationResult {
    /// The relative weight `w'` of a leaf, addressed by its checkId.
    pub fn leaf_relative_weight(&self, check_id: &str) -> Option<f64> {
        let path = self.leaf_paths.get(check_id)?;
        self.relative_weight.get(path).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvaluateError {
    Profile(ProfileError),
    /// A leaf names a checkId the executor does not know.
    UnknownCheck(String),
}

impl core::fmt::Display for EvaluateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EvaluateError::Profile(e) => write!(f, "{e}"),
            EvaluateError::UnknownCheck(id) => write!(f, "no check registered as `{id}`"),
        }
    }
}

impl From<ProfileError> for EvaluateError {
    fn from(e: ProfileError) -> Self {
        EvaluateError::Profile(e)
    }
}

/// Evaluates the tree against the built-in checks.
pub fn evaluate(
    tree: &ConditionNode,
    profile: &WeightProfile,
    ontology: &Ontology,
) -> Result<EvaluationResult, EvaluateError> {
    let mut result = evaluate_with(tree, profile, &mut |check_id| {
        run_check(check_id, ontology).ok_or_else(|| check_id.to_owned())
    })?;
    result.element_counts = ElementCounts::of(ontology);
    Ok(result)
}

/// Evaluates the tree with an arbitrary leaf executor (used for scripted
/// scores in tests and projections). The executor returns `Err(checkId)` for
/// unknown checks.
pub fn evaluate_with(
    tree: &ConditionNode,
    profile: &WeightProfile,
    exec: &mut dyn FnMut(&'static str) -> Result<LeafResult, String>,
) -> Result<EvaluationResult, EvaluateError> {
    profile.validate(tree)?;
    let mut result = EvaluationResult {
        phase: profile.phase,
        oc: 0.0,
        per_node_price: BTreeMap::new(),
        node_weight: BTreeMap::new(),
        relative_weight: BTreeMap::new(),
        leaf_results: BTreeMap::new(),
        leaf_paths: BTreeMap::new(),
        element_counts: ElementCounts::default(),
    };
    collect_weights(tree, profile, 1.0, 1.0, &mut result);
    result.oc = eval_node(tree, profile, exec, &mut result)?;
    Ok(result)
}

fn collect_weights(
    node: &ConditionNode,
    profile: &WeightProfile,
    own_weight: f64,
    product: f64,
    result: &mut EvaluationResult,
) {
    result.node_weight.insert(node.path.clone(), own_weight);
    result.relative_weight.insert(node.path.clone(), product);
    if let NodeBody::Aggregate(children) = &node.body {
        let sum: f64 = children.iter().map(|c| profile.weight_of(c)).sum();
        for child in children {
            let normalized = if sum > 0.0 { profile.weight_of(child) / sum } else { 0.0 };
            collect_weights(child, profile, normalized, product * normalized, result);
        }
    }
}

fn eval_node(
    node: &ConditionNode,
    profile: &WeightProfile,
    exec: &mut dyn FnMut(&'static str) -> Result<LeafResult, String>,
    result: &mut EvaluationResult,
) -> Result<f64, EvaluateError> {
    let price = match &node.body {
        NodeBody::Leaf(check_id) => {
            let leaf = exec(check_id).map_err(EvaluateError::UnknownCheck)?;
            let score = leaf.score;
            result.leaf_results.insert((*check_id).to_owned(), leaf);
            result.leaf_paths.insert((*check_id).to_owned(), node.path.clone());
            score
        }
        NodeBody::Aggregate(children) => {
            let sum: f64 = children.iter().map(|c| profile.weight_of(c)).sum();
            let mut price = 0.0;
            for child in children {
                let weight = profile.weight_of(child);
                // zero-weight sub-conditions are skipped entirely, never executed
                if weight == 0.0 {
                    continue;
                }
                price += weight / sum * eval_node(child, profile, exec, result)?;
            }
            price
        }
    };
    result.per_node_price.insert(node.path.clone(), price);
    Ok(price)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn uniform_profile(phase: Phase) -> WeightProfile {
        WeightProfile { phase, weights: BTreeMap::new() }
    }

    fn constant_exec(score: f64) -> impl FnMut(&'static str) -> Result<LeafResult, String> {
        move |id| Ok(LeafResult::new(id, score, Vec::new()))
    }

    #[test]
    fn default_tree_binds_every_check_once() {
        let tree = default_tree();
        let mut ids: Vec<&str> = tree.leaves().into_iter().map(|(_, id)| id).collect();
        ids.sort_unstable();
        let mut expected: Vec<&str> =
            crate::checks::ALL_CHECKS.iter().map(|(id, _)| *id).collect();
        expected.sort_unstable();
        assert_eq!(ids, expected);
        assert_eq!(ids.len(), 17);
    }

    #[test]
    fn relative_weights_sum_to_one() {
        let tree = default_tree();
        for phase in Phase::ALL {
            let weights = relative_weights(&tree, &WeightProfile::builtin(phase)).unwrap();
            let sum: f64 = weights.values().sum();
            assert!((sum - 1.0).abs() < 1e-9, "phase {phase}: sum {sum}");
        }
    }

    #[test]
    fn uniform_path_products_match_hand_computation() {
        let tree = default_tree();
        let weights = relative_weights(&tree, &uniform_profile(Phase::PostDevelopment)).unwrap();
        // three components, tbox has five sublevels, description has 2 leaves
        let nl = weights["oc/tbox/description/nl"];
        assert!((nl - 1.0 / 3.0 / 5.0 / 2.0).abs() < 1e-12);
        // rbox has two sublevels of one leaf each
        let inv = weights["oc/rbox/partition/inverse_properties"];
        assert!((inv - 1.0 / 3.0 / 2.0).abs() < 1e-12);
        // abox: two sublevels, two leaves each
        let ext = weights["oc/abox/partition/external_instances"];
        assert!((ext - 1.0 / 3.0 / 2.0 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn builtin_profiles_encode_the_phase_narrative() {
        let early = WeightProfile::builtin(Phase::BusinessVocabulary);
        assert_eq!(early.weights["oc/tbox/redundancy"], 0.0);
        assert_eq!(early.weights["oc/tbox/anomaly"], 0.0);
        let desc = early.weights["oc/tbox/description"];
        for sub in SUBLEVELS {
            assert!(early.weights[&format!("oc/tbox/{sub}")] <= desc);
        }

        let post = WeightProfile::builtin(Phase::PostDevelopment);
        let mut sublevels: Vec<(&str, f64)> = SUBLEVELS
            .iter()
            .map(|s| (*s, post.weights[&format!("oc/tbox/{s}")]))
            .collect();
        sublevels.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let top3: Vec<&str> = sublevels[..3].iter().map(|(s, _)| *s).collect();
        assert!(top3.contains(&"redundancy"));
        assert!(top3.contains(&"description"));
        assert!(top3.contains(&"anomaly"));

        for phase in Phase::ALL {
            WeightProfile::builtin(phase).validate(&default_tree()).unwrap();
        }
    }

    #[test]
    fn extreme_scores_bound_oc() {
        let tree = default_tree();
        let profile = WeightProfile::builtin(Phase::DetailDescription);
        let ones = evaluate_with(&tree, &profile, &mut constant_exec(1.0)).unwrap();
        assert!((ones.oc - 1.0).abs() < 1e-12);
        let zeros = evaluate_with(&tree, &profile, &mut constant_exec(0.0)).unwrap();
        assert!(zeros.oc.abs() < 1e-12);
    }

    #[test]
    fn recursion_matches_flat_weighted_sum() {
        let tree = default_tree();
        let profile = WeightProfile::builtin(Phase::RestrictionsAndRules);
        // deterministic pseudo-random scores per checkId
        let score_of = |id: &str| {
            let h = id.bytes().fold(7u32, |acc, b| acc.wrapping_mul(31).wrapping_add(b as u32));
            (h % 1000) as f64 / 1000.0
        };
        let result =
            evaluate_with(&tree, &profile, &mut |id| Ok(LeafResult::new(id, score_of(id), Vec::new())))
                .unwrap();
        let weights = relative_weights(&tree, &profile).unwrap();
        let flat: f64 = tree
            .leaves()
            .iter()
            .map(|(path, id)| weights[*path] * score_of(id))
            .sum();
        assert!((result.oc - flat).abs() < 1e-9);
    }

    #[test]
    fn zero_weight_subtrees_are_skipped() {
        let tree = default_tree();
        let profile = WeightProfile::builtin(Phase::BusinessVocabulary);
        let result = evaluate_with(&tree, &profile, &mut |id| {
            assert!(
                !id.starts_with("redundancy.")
                    && !id.starts_with("consistency.")
                    && !id.starts_with("anomaly."),
                "executed zero-weight leaf {id}"
            );
            Ok(LeafResult::new(id, 1.0, Vec::new()))
        })
        .unwrap();
        assert!(!result.per_node_price.contains_key("oc/tbox/redundancy"));
        assert_eq!(result.leaf_relative_weight(ids::HIERARCHY_REDUNDANCY), None);
    }

    #[test]
    fn normalization_invariance() {
        let tree = default_tree();
        let profile = uniform_profile(Phase::TaxonomyDefinition);
        let mut scaled = profile.clone();
        // rescale one sibling group by a positive constant
        for sub in SUBLEVELS {
            scaled.weights.insert(format!("oc/tbox/{sub}"), 42.0);
        }
        scaled.weights.retain(|path, _| default_tree().paths().contains(&path.as_str()));
        let a = evaluate_with(&tree, &profile, &mut constant_exec(0.5)).unwrap();
        let b = evaluate_with(&tree, &scaled, &mut constant_exec(0.5)).unwrap();
        assert!((a.oc - b.oc).abs() < 1e-12);
    }

    #[test]
    fn profile_validation_errors() {
        let tree = default_tree();
        let mut p = uniform_profile(Phase::BusinessVocabulary);
        p.weights.insert("oc/tbox/nonsense".to_string(), 0.5);
        assert!(matches!(p.validate(&tree), Err(ProfileError::UnknownPath(_))));

        let mut p = uniform_profile(Phase::BusinessVocabulary);
        p.weights.insert("oc/tbox".to_string(), -1.0);
        assert!(matches!(p.validate(&tree), Err(ProfileError::NegativeWeight(_))));

        let mut p = uniform_profile(Phase::BusinessVocabulary);
        for c in ["tbox", "rbox", "abox"] {
            p.weights.insert(format!("oc/{c}"), 0.0);
        }
        assert_eq!(p.validate(&tree), Err(ProfileError::ZeroSiblingGroup("oc".to_string())));
    }

    #[test]
    fn phase_order_and_parsing() {
        assert!(Phase::BusinessVocabulary < Phase::PostDevelopment);
        assert_eq!(Phase::RestrictionsAndRules.next(), Some(Phase::PostDevelopment));
        assert_eq!(Phase::PostDevelopment.next(), None);
        for phase in Phase::ALL {
            assert_eq!(phase.as_str().parse::<Phase>().unwrap(), phase);
        }
        assert!("2.7".parse::<Phase>().is_err());
    }
}
