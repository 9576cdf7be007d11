//! Weight-profile files: a JSON key tree of node paths to weights, grouped
//! by phase, layered on top of the built-in profiles.
//!
//! ```json
//! {
//!   "phases": {
//!     "2.3": { "oc/tbox/description": 0.4, "oc/tbox/description/nl": 2.0 },
//!     "post-development": { "oc/abox": 0.5 }
//!   }
//! }
//! ```
//!
//! Phases not mentioned keep their built-in weights; weights need not be
//! pre-normalized (sibling groups are normalized at evaluation time).

use std::collections::BTreeMap;

use ontoeval_core::tree::{builtin_profiles, default_tree, Phase, WeightProfile};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDocument {
    phases: BTreeMap<String, BTreeMap<String, f64>>,
}

/// Parses a profile document and merges it over the built-in profiles,
/// validating every resulting profile against the default tree.
pub fn parse_weight_profiles(
    document: &str,
) -> Result<BTreeMap<Phase, WeightProfile>, Vec<String>> {
    let parsed: ProfileDocument = serde_json::from_str(document)
        .map_err(|e| vec![format!("profile document is not valid JSON: {e}")])?;

    let mut profiles = builtin_profiles();
    let mut errors = Vec::new();
    for (phase_name, overrides) in &parsed.phases {
        let phase: Phase = match phase_name.parse() {
            Ok(p) => p,
            Err(e) => {
                errors.push(e);
                continue;
            }
        };
        let base = profiles.get(&phase).expect("builtins cover every phase");
        profiles.insert(phase, base.with_overrides(overrides));
    }

    let tree = default_tree();
    for profile in profiles.values() {
        if let Err(e) = profile.validate(&tree) {
            errors.push(format!("phase {}: {e}", profile.phase));
        }
    }
    if errors.is_empty() {
        Ok(profiles)
    } else {
        Err(errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_leaf_override_keeps_the_rest() {
        let doc = r#"{"phases": {"2.3": {"oc/tbox/description/nl": 3.0}}}"#;
        let profiles = parse_weight_profiles(doc).unwrap();
        let custom = &profiles[&Phase::TaxonomyDefinition];
        let builtin = WeightProfile::builtin(Phase::TaxonomyDefinition);
        assert_eq!(custom.weights["oc/tbox/description/nl"], 3.0);
        assert_eq!(custom.weights["oc/tbox/description"], builtin.weights["oc/tbox/description"]);
        // untouched phases are bit-identical to the builtins
        assert_eq!(profiles[&Phase::BusinessVocabulary], WeightProfile::builtin(Phase::BusinessVocabulary));
    }

    #[test]
    fn negative_weight_is_rejected() {
        let doc = r#"{"phases": {"2.1": {"oc/tbox": -0.2}}}"#;
        let errors = parse_weight_profiles(doc).unwrap_err();
        assert!(errors[0].contains("negative"), "{errors:?}");
    }

    #[test]
    fn unknown_path_and_phase_are_rejected() {
        let doc = r#"{"phases": {"2.9": {}, "2.1": {"oc/nope": 1.0}}}"#;
        let errors = parse_weight_profiles(doc).unwrap_err();
        assert_eq!(errors.len(), 2);
    }

    #[test]
    fn zeroed_sibling_group_is_rejected() {
        let doc = r#"{"phases": {"2.4": {"oc/tbox": 0, "oc/rbox": 0, "oc/abox": 0}}}"#;
        let errors = parse_weight_profiles(doc).unwrap_err();
        assert!(errors[0].contains("weight zero"), "{errors:?}");
    }

    #[test]
    fn empty_overrides_reproduce_builtins() {
        let profiles = parse_weight_profiles(r#"{"phases": {}}"#).unwrap();
        assert_eq!(profiles, builtin_profiles());
    }
}
