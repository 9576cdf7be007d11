//! Evaluate an ontology from the command line and print the top three
//! improvement actions. Run with:
//!
//!     cargo run --example completeness -- path/to/ontology.ttl

use ontoeval::load_ontology;
use ontoeval_core::advisor::recommend_improvements;
use ontoeval_core::tree::{default_tree, evaluate, Phase, WeightProfile};

fn main() -> anyhow::Result<()> {
    let path = std::env::args().nth(1).expect("usage: completeness <ontology.ttl>");
    let ontology = load_ontology(path.as_ref())?;
    let profile = WeightProfile::builtin(Phase::PostDevelopment);
    let evaluation = evaluate(&default_tree(), &profile, &ontology)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    println!("OC {:.1}%", evaluation.oc * 100.0);
    for action in recommend_improvements(&evaluation).into_iter().take(3) {
        println!("  +{:.1}%  {}", action.gain, action.description);
    }
    Ok(())
}
