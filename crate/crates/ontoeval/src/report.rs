//! Report rendering: the same evaluation as text, JSON, HTML or CSV.

use ontoeval_core::advisor::ImprovementAction;
use ontoeval_core::tree::EvaluationResult;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Html,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "html" => Ok(Format::Html),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text|json|html|csv)")),
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    oc: f64,
    phase: &'a str,
    element_counts: JsonCounts,
    nodes: Vec<JsonNode>,
    actions: Vec<JsonAction<'a>>,
}

#[derive(Serialize)]
struct JsonCounts {
    classes: usize,
    properties: usize,
    axioms: usize,
    individuals: usize,
}

#[derive(Serialize)]
struct JsonNode {
    path: String,
    weight: f64,
    relative_weight: f64,
    price: f64,
}

#[derive(Serialize)]
struct JsonAction<'a> {
    check_id: &'a str,
    gain: f64,
    findings: Vec<JsonFinding<'a>>,
}

#[derive(Serialize)]
struct JsonFinding<'a> {
    kind: &'a str,
    subjects: Vec<&'a str>,
    suggestion: &'a str,
}

fn percent(x: f64) -> String {
    format!("{:.1}%", x * 100.0)
}

/// Renders an evaluation plus its recommendations in the requested format.
pub fn render(
    evaluation: &EvaluationResult,
    actions: &[ImprovementAction],
    format: Format,
) -> String {
    match format {
        Format::Text => render_text(evaluation, actions),
        Format::Json => render_json(evaluation, actions),
        Format::Html => render_html(evaluation, actions),
        Format::Csv => render_csv(evaluation),
    }
}

fn render_json(evaluation: &EvaluationResult, actions: &[ImprovementAction]) -> String {
    let phase = evaluation.phase.as_str();
    let report = JsonReport {
        oc: evaluation.oc,
        phase,
        element_counts: JsonCounts {
            classes: evaluation.element_counts.classes,
            properties: evaluation.element_counts.properties,
            axioms: evaluation.element_counts.axioms,
            individuals: evaluation.element_counts.individuals,
        },
        nodes: evaluation
            .per_node_price
            .iter()
            .map(|(path, price)| JsonNode {
                path: path.clone(),
                weight: evaluation.node_weight[path],
                relative_weight: evaluation.relative_weight[path],
                price: *price,
            })
            .collect(),
        actions: actions
            .iter()
            .map(|a| JsonAction {
                check_id: &a.check_id,
                gain: a.gain,
                findings: a
                    .findings
                    .iter()
                    .map(|f| JsonFinding {
                        kind: &f.kind,
                        subjects: f.subjects.iter().map(|s| s.as_str()).collect(),
                        suggestion: &f.suggestion,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

fn progress_bar(oc: f64, width: usize) -> String {
    let filled = (oc * width as f64).round() as usize;
    let filled = filled.min(width);
    format!("[{}{}]", "#".repeat(filled), ".".repeat(width - filled))
}

fn render_text(evaluation: &EvaluationResult, actions: &[ImprovementAction]) -> String {
    let c = &evaluation.element_counts;
    let mut out = format!(
        "OC {} {} phase {}\nclasses {}  properties {}  axioms {}  individuals {}\n\n",
        percent(evaluation.oc),
        progress_bar(evaluation.oc, 25),
        evaluation.phase,
        c.classes,
        c.properties,
        c.axioms,
        c.individuals,
    );
    out += &format!("{:<45} {:>7} {:>7} {:>7}\n", "node", "weight", "w'", "price");
    for (path, price) in &evaluation.per_node_price {
        out += &format!(
            "{:<45} {:>7.3} {:>7.3} {:>7}\n",
            path,
            evaluation.node_weight[path],
            evaluation.relative_weight[path],
            percent(*price),
        );
    }
    if actions.is_empty() {
        out += "\nno improvement actions: every weighted condition is satisfied\n";
    } else {
        out += "\nimprovement actions (projected OC gain):\n";
        for action in actions {
            out += &format!(
                "  +{:.1}%  {}  {} ({} finding(s))\n",
                action.gain,
                action.check_id,
                action.description,
                action.findings.len(),
            );
        }
    }
    out
}

const SUBLEVELS: [&str; 5] = ["description", "partition", "redundancy", "consistency", "anomaly"];

/// Sublevel prices across components, the textual analogue of the radar
/// chart: relative-weight-weighted average of `oc/*/sublevel` node prices.
fn sublevel_summary(evaluation: &EvaluationResult) -> Vec<(&'static str, Option<f64>)> {
    SUBLEVELS
        .iter()
        .map(|sub| {
            let mut weighted = 0.0;
            let mut total_weight = 0.0;
            let mut plain = 0.0;
            let mut n = 0usize;
            for component in ["tbox", "rbox", "abox"] {
                let path = format!("oc/{component}/{sub}");
                let Some(price) = evaluation.per_node_price.get(&path) else { continue };
                let w = evaluation.relative_weight[&path];
                weighted += w * price;
                total_weight += w;
                plain += price;
                n += 1;
            }
            let value = if n == 0 {
                None
            } else if total_weight > 0.0 {
                Some(weighted / total_weight)
            } else {
                Some(plain / n as f64)
            };
            (*sub, value)
        })
        .collect()
}

fn render_html(evaluation: &EvaluationResult, actions: &[ImprovementAction]) -> String {
    let mut out = String::from(
        "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>Ontology completeness</title></head><body>\n",
    );
    out += &format!(
        "<h1>Ontology completeness: {}</h1>\n<p>phase {} &middot; {} classes, {} properties, {} axioms, {} individuals</p>\n",
        percent(evaluation.oc),
        evaluation.phase,
        evaluation.element_counts.classes,
        evaluation.element_counts.properties,
        evaluation.element_counts.axioms,
        evaluation.element_counts.individuals,
    );
    out += "<h2>Sublevel summary</h2>\n<table border=\"1\"><tr><th>sublevel</th><th>price</th></tr>\n";
    for (sublevel, value) in sublevel_summary(evaluation) {
        let cell = match value {
            Some(v) => percent(v),
            None => String::from("&mdash;"),
        };
        out += &format!("<tr><td>{sublevel}</td><td>{cell}</td></tr>\n");
    }
    out += "</table>\n<h2>Nodes</h2>\n<table border=\"1\"><tr><th>path</th><th>weight</th><th>w'</th><th>price</th></tr>\n";
    for (path, price) in &evaluation.per_node_price {
        out += &format!(
            "<tr><td>{}</td><td>{:.3}</td><td>{:.3}</td><td>{}</td></tr>\n",
            path,
            evaluation.node_weight[path],
            evaluation.relative_weight[path],
            percent(*price),
        );
    }
    out += "</table>\n<h2>Improvement actions</h2>\n<ol>\n";
    for action in actions {
        out += &format!(
            "<li>+{:.1}% <code>{}</code>: {} ({} finding(s))</li>\n",
            action.gain,
            action.check_id,
            action.description,
            action.findings.len(),
        );
    }
    out += "</ol>\n</body></html>\n";
    out
}

fn render_csv(evaluation: &EvaluationResult) -> String {
    let mut out = String::from("path,weight,relative_weight,price\n");
    for (path, price) in &evaluation.per_node_price {
        out += &format!(
            "{},{},{},{}\n",
            path, evaluation.node_weight[path], evaluation.relative_weight[path], price
        );
    }
    out
}
