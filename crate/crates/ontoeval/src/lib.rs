//! File formats, reports and plumbing around `ontoeval-core`: weight-profile
//! files, report rendering and snapshot loading for the CLI.

pub mod profile;
pub mod report;

pub use ontoeval_core as core;

use std::path::Path;

use anyhow::{bail, Context, Result};
use ontoeval_core::parser::Severity;
use ontoeval_core::{parse_ontology, Ontology, ParseDiagnostic};

/// Formats diagnostics with file context, one per line.
pub fn format_diagnostics(path: &Path, diagnostics: &[ParseDiagnostic]) -> String {
    diagnostics
        .iter()
        .map(|d| format!("{}:{}", path.display(), d))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Loads and parses one ontology document; warnings go to stderr, errors
/// fail the load.
pub fn load_ontology(path: &Path) -> Result<Ontology> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    match parse_ontology(&text) {
        Ok((ontology, warnings)) => {
            if !warnings.is_empty() {
                eprintln!("{}", format_diagnostics(path, &warnings));
            }
            Ok(ontology)
        }
        Err(diagnostics) => bail!("{}", format_diagnostics(path, &diagnostics)),
    }
}

/// Reads the `.ttl` snapshots of a replay directory in file-name order.
pub fn load_snapshots(dir: &Path) -> Result<Vec<(std::path::PathBuf, String)>> {
    let mut paths: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "ttl"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no .ttl snapshots in {}", dir.display());
    }
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p)
                .with_context(|| format!("cannot read {}", p.display()))?;
            Ok((p, text))
        })
        .collect()
}

/// True when any diagnostic is an error.
pub fn has_errors(diagnostics: &[ParseDiagnostic]) -> bool {
    diagnostics.iter().any(|d| d.severity == Severity::Error)
}
