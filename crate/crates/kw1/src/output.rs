//! Serialized output: the JSON document, and Markdown / CSV renderings that
//! mirror it field for field.

use kw1_core::redenv::OracleEstimate;
use kw1_core::verdict::{KW1Report, MUpper};
use serde_json::{json, Map, Value};

pub const TOOL: &str = "kw1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
}

pub fn oracle_json(o: &OracleEstimate) -> Value {
    json!({
        "mEst": o.m_est,
        "witness": o.witness,
        "witnessExtensionDegree": o.witness_extension_degree,
        "witnessDefiningPolynomial": o.defining_polynomial,
        "samples": o.samples,
        "charactersTried": o.characters_tried,
        "seed": o.seed,
        "escalated": o.escalated,
        "degraded": o.degraded,
    })
}

fn m_upper_json(m: &MUpper) -> Value {
    match m {
        MUpper::Exact(v) => json!(*v),
        formal => json!(formal.render()),
    }
}

pub fn report_json(r: &KW1Report) -> Value {
    json!({
        "algebraName": r.algebra_name,
        "p": r.p,
        "e": r.e,
        "dim": r.dim,
        "ind": r.ind,
        "degreeBound": r.degree_bound,
        "rankZoverZp": r.rank_z_over_zp,
        "mUpper": m_upper_json(&r.m_upper),
        "mLower": r.m_lower,
        "oracleEstimate": r.oracle_estimate.as_ref().map(oracle_json),
        "verdict": r.verdict.as_str(),
        "seed": r.seed,
        "definingPolynomial": r.defining_polynomial,
        "stabilized": r.stabilized,
        "centerDimension": r.center_dimension,
        "notes": r.notes,
    })
}

/// `{tool, version, reports}` for the full pipeline.
pub fn reports_document(reports: &[KW1Report]) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    })
}

/// `{tool, version, command, results}` for the single-operation commands.
pub fn results_document(command: &str, results: Vec<Value>) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "results": results,
    })
}

/// The list of records in a document: `reports` or `results`.
fn records(doc: &Value) -> (&str, &[Value]) {
    for key in ["reports", "results"] {
        if let Some(Value::Array(v)) = doc.get(key) {
            return (key, v);
        }
    }
    ("results", &[])
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join("; "),
        other => other.to_string(),
    }
}

/// Flatten nested objects into dotted keys; arrays of scalars are joined
/// with "; ".
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar_text(other))),
    }
}

pub fn render(doc: &Value, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Md => Ok(render_md(doc)),
        Format::Csv => render_csv(doc),
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn render_md(doc: &Value) -> String {
    let mut out = String::new();
    let header = match doc.get("command").and_then(Value::as_str) {
        Some(c) => format!("# {TOOL} {VERSION}: {c}\n"),
        None => format!("# {TOOL} {VERSION}\n"),
    };
    out.push_str(&header);
    let (key, recs) = records(doc);
    for (i, r) in recs.iter().enumerate() {
        let title = r.get("algebraName").and_then(Value::as_str).unwrap_or("");
        let p = r.get("p").map(|v| format!(" p={v}")).unwrap_or_default();
        out.push_str(&format!("\n## {key} {}: {title}{p}\n\n| field | value |\n|---|---|\n", i + 1));
        let mut rows = Vec::new();
        flatten("", r, &mut rows);
        for (k, v) in rows {
            out.push_str(&format!("| {} | {} |\n", md_cell(&k), md_cell(&v)));
        }
    }
    out
}

fn render_csv(doc: &Value) -> anyhow::Result<String> {
    let (_, recs) = records(doc);
    let flat: Vec<Vec<(String, String)>> = recs
        .iter()
        .map(|r| {
            let mut rows = Vec::new();
            flatten("", r, &mut rows);
            rows
        })
        .collect();
    let mut columns: Vec<String> = Vec::new();
    for rows in &flat {
        for (k, _) in rows {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&columns)?;
    for rows in &flat {
        let map: Map<String, Value> = rows.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        w.write_record(columns.iter().map(|c| map.get(c).and_then(Value::as_str).unwrap_or("")))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
