//! Replays an ordered edit history of ontology snapshots through the ROD
//! phase schedule, producing per-iteration OC and element-count records.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::advisor::gate_phase;
use crate::parser::{parse_ontology, ParseDiagnostic};
use crate::tree::{
    evaluate, ConditionNode, ElementCounts, EvaluateError, Phase, WeightProfile,
};

/// One iteration of the history.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplayRecord {
    /// 1-based snapshot index.
    pub iteration: usize,
    /// Phase the snapshot was evaluated under.
    pub phase: Phase,
    pub oc: f64,
    pub counts: ElementCounts,
    /// True when this iteration's OC reached the threshold and the phase
    /// advances for the next one.
    pub gate_fired: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReplayError {
    /// Snapshot `iteration` (1-based) failed to parse.
    Parse { iteration: usize, diagnostics: Vec<ParseDiagnostic> },
    /// No profile registered for the phase the replay reached.
    MissingProfile(Phase),
    Evaluate(EvaluateError),
}

impl core::fmt::Display for ReplayError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReplayError::Parse { iteration, diagnostics } => {
                write!(f, "snapshot {iteration} failed to parse")?;
                for d in diagnostics {
                    write!(f, "; {d}")?;
                }
                Ok(())
            }
            ReplayError::MissingProfile(phase) => {
                write!(f, "no weight profile for phase {phase}")
            }
            ReplayError::Evaluate(e) => write!(f, "{e}"),
        }
    }
}

impl From<EvaluateError> for ReplayError {
    fn from(e: EvaluateError) -> Self {
        ReplayError::Evaluate(e)
    }
}

/// Evaluates each snapshot under the current phase profile, starting at 2.1.
/// When the gate fires the phase advances by exactly one step for the next
/// iteration.
pub fn replay<S: AsRef<str>>(
    snapshots: &[S],
    tree: &ConditionNode,
    profiles: &BTreeMap<Phase, WeightProfile>,
    threshold: f64,
) -> Result<Vec<ReplayRecord>, ReplayError> {
    let mut phase = Phase::BusinessVocabulary;
    let mut records = Vec::with_capacity(snapshots.len());
    for (index, snapshot) in snapshots.iter().enumerate() {
        let iteration = index + 1;
        let (ontology, _warnings) = parse_ontology(snapshot.as_ref())
            .map_err(|diagnostics| ReplayError::Parse { iteration, diagnostics })?;
        let profile = profiles.get(&phase).ok_or(ReplayError::MissingProfile(phase))?;
        let evaluation = evaluate(tree, profile, &ontology)?;
        let decision = gate_phase(&evaluation, phase, threshold);
        records.push(ReplayRecord {
            iteration,
            phase,
            oc: evaluation.oc,
            counts: evaluation.element_counts,
            gate_fired: decision.advance,
        });
        if decision.advance {
            phase = decision.next_phase.expect("advance implies a next phase");
        }
    }
    Ok(records)
}

/// CSV rows for the records: `iteration,phase,oc,classes,properties,axioms,
/// individuals,gate_fired`, OC to 4 decimal places.
pub fn records_to_csv(records: &[ReplayRecord]) -> String {
    let mut out =
        String::from("iteration,phase,oc,classes,properties,axioms,individuals,gate_fired\n");
    for r in records {
        out += &alloc::format!(
            "{},{},{:.4},{},{},{},{},{}\n",
            r.iteration,
            r.phase,
            r.oc,
            r.counts.classes,
            r.counts.properties,
            r.counts.axioms,
            r.counts.individuals,
            r.gate_fired
        );
    }
    out
}
