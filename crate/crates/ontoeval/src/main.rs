use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use ontoeval::profile::parse_weight_profiles;
use ontoeval::report::{render, Format};
use ontoeval::{load_ontology, load_snapshots};
use ontoeval_core::advisor::{gate_phase, place_phase, recommend_improvements};
use ontoeval_core::replay::{records_to_csv, replay};
use ontoeval_core::tree::{builtin_profiles, default_tree, evaluate, Phase, WeightProfile};
use ontoeval_core::{Ontology, DEFAULT_THRESHOLD};

/// Continuous ontology-completeness evaluation.
#[derive(Parser)]
#[command(name = "ontoeval", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an ontology: OC score, per-node prices and element counts.
    Evaluate(EvaluateArgs),
    /// List improvement actions sorted by projected OC gain.
    Recommend(EvaluateArgs),
    /// Check the phase gate: exits 0 when the ontology may advance, 3 when not.
    Gate(EvaluateArgs),
    /// Suggest the development phase the ontology is in.
    Place(PlaceArgs),
    /// Replay a directory of .ttl snapshots through the phase schedule (CSV).
    Replay(ReplayArgs),
}

#[derive(Args)]
struct EvaluateArgs {
    /// Ontology document (Turtle subset).
    ontology: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
    /// Development phase; inferred via placement when omitted.
    #[arg(long)]
    phase: Option<Phase>,
    /// Report format.
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct PlaceArgs {
    ontology: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ReplayArgs {
    /// Directory of snapshots, replayed in file-name order.
    snapshots: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Weight-profile file (JSON); built-in profiles when omitted.
    #[arg(long, env = "ONTOEVAL_PROFILE")]
    profile: Option<PathBuf>,
    /// OC threshold for phase gating, in (0, 1].
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
}

impl CommonArgs {
    fn threshold(&self) -> Result<f64> {
        if self.threshold > 0.0 && self.threshold <= 1.0 {
            Ok(self.threshold)
        } else {
            // usage error: report via clap's exit code
            clap::Error::raw(
                clap::error::ErrorKind::InvalidValue,
                format!("threshold {} is not in (0, 1]\n", self.threshold),
            )
            .exit()
        }
    }

    fn profiles(&self) -> Result<std::collections::BTreeMap<Phase, WeightProfile>> {
        match &self.profile {
            None => Ok(builtin_profiles()),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| anyhow!("cannot read {}: {e}", path.display()))?;
                parse_weight_profiles(&text)
                    .map_err(|errors| anyhow!("{}: {}", path.display(), errors.join("; ")))
            }
        }
    }
}

fn resolve_phase(
    requested: Option<Phase>,
    ontology: &Ontology,
    profiles: &std::collections::BTreeMap<Phase, WeightProfile>,
    threshold: f64,
) -> Result<Phase> {
    match requested {
        Some(phase) => Ok(phase),
        None => place_phase(ontology, &default_tree(), profiles, threshold)
            .map_err(|e| anyhow!("{e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Evaluate(args) => {
            let (evaluation, _) = evaluate_command(&args)?;
            let actions = recommend_improvements(&evaluation);
            print!("{}", render(&evaluation, &actions, args.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Recommend(args) => {
            let (evaluation, _) = evaluate_command(&args)?;
            let actions = recommend_improvements(&evaluation);
            match args.format {
                Format::Text => {
                    if actions.is_empty() {
                        println!("nothing to improve: OC {:.1}%", evaluation.oc * 100.0);
                    }
                    for action in &actions {
                        println!(
                            "+{:.1}%  {}  {}",
                            action.gain, action.check_id, action.description
                        );
                        for finding in &action.findings {
                            println!("        {}: {}", finding.kind, finding.suggestion);
                        }
                    }
                }
                _ => print!("{}", render(&evaluation, &actions, args.format)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gate(args) => {
            let (evaluation, phase) = evaluate_command(&args)?;
            let decision = gate_phase(&evaluation, phase, args.common.threshold()?);
            if decision.advance {
                let next = decision.next_phase.expect("advance implies next");
                println!(
                    "OC {:.1}% ≥ {:.1}%: advance to {next}",
                    decision.oc * 100.0,
                    decision.threshold * 100.0
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "OC {:.1}% < {:.1}%: stay in {}",
                    decision.oc * 100.0,
                    decision.threshold * 100.0,
                    decision.current_phase
                );
                Ok(ExitCode::from(3))
            }
        }
        Command::Place(args) => {
            let threshold = args.common.threshold()?;
            let profiles = args.common.profiles()?;
            let ontology = load_ontology(&args.ontology)?;
            let phase = place_phase(&ontology, &default_tree(), &profiles, threshold)
                .map_err(|e| anyhow!("{e}"))?;
            println!("{phase}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay(args) => {
            let threshold = args.common.threshold()?;
            let profiles = args.common.profiles()?;
            let snapshots = load_snapshots(&args.snapshots)?;
            let documents: Vec<&str> = snapshots.iter().map(|(_, text)| text.as_str()).collect();
            let records = replay(&documents, &default_tree(), &profiles, threshold)
                .map_err(|e| anyhow!("{e}"))?;
            print!("{}", records_to_csv(&records));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn evaluate_command(args: &EvaluateArgs) -> Result<(ontoeval_core::EvaluationResult, Phase)> {
    let threshold = args.common.threshold()?;
    let profiles = args.common.profiles()?;
    let ontology = load_ontology(&args.ontology)?;
    let phase = resolve_phase(args.phase, &ontology, &profiles, threshold)?;
    let profile = profiles
        .get(&phase)
        .ok_or_else(|| anyhow!("no profile for phase {phase}"))?;
    let evaluation =
        evaluate(&default_tree(), profile, &ontology).map_err(|e| anyhow!("{e}"))?;
    Ok((evaluation, phase))
}
