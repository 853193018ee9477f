//! The JSON input document: basis labels, brackets with rational-string
//! coefficients, and an optional p-map override.

use std::collections::{BTreeMap, BTreeSet};

use kw1_core::field::{parse_rational, render_rational};
use kw1_core::lie::{validate_presentation, LieAlgebraPresentation};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pmap_override: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("Jacobi identity fails on {}", render_triples(.0))]
    Jacobi(Vec<[String; 3]>),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

fn render_triples(ts: &[[String; 3]]) -> String {
    ts.iter()
        .map(|[a, b, c]| format!("({a}, {b}, {c})"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// `x^[p]` values given by the user, per basis index, as rational vectors.
pub type PMapOverride = BTreeMap<usize, Vec<BigRational>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub presentation: LieAlgebraPresentation,
    pub pmap_override: Option<PMapOverride>,
}

/// Parse and validate a document; the Jacobi identity is checked over `Q`.
pub fn parse_input(text: &str) -> Result<ParsedInput, InputError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    from_document(&doc)
}

pub fn from_document(doc: &InputDocument) -> Result<ParsedInput, InputError> {
    let mut seen = BTreeSet::new();
    for (i, label) in doc.basis.iter().enumerate() {
        if label.is_empty() {
            return Err(parse_error(format!("basis[{i}]"), "empty label"));
        }
        if !seen.insert(label.as_str()) {
            return Err(InputError::DuplicateLabel(label.clone()));
        }
    }
    let mut pres = LieAlgebraPresentation::new(doc.name.clone(), doc.basis.clone());
    let index = |loc: &str, label: &str| {
        pres_index(&doc.basis, label).ok_or_else(|| parse_error(loc, format!("undeclared label {label:?}")))
    };
    let mut pairs = BTreeSet::new();
    for (b, entry) in doc.brackets.iter().enumerate() {
        let loc = format!("brackets[{b}]");
        let i = index(&format!("{loc}.left"), &entry.left)?;
        let j = index(&format!("{loc}.right"), &entry.right)?;
        if i == j {
            return Err(parse_error(loc, "bracket of a label with itself"));
        }
        if !pairs.insert((i.min(j), i.max(j))) {
            return Err(parse_error(loc, "pair bracketed twice"));
        }
        let mut result = Vec::new();
        for (label, value) in &entry.result {
            let k = index(&format!("{loc}.result"), label)?;
            let c = rational(&format!("{loc}.result.{label}"), value)?;
            result.push((k, c));
        }
        pres.set_bracket(i, j, &result)
            .map_err(|e| parse_error(loc.clone(), e.to_string()))?;
    }
    if let Err(violations) = validate_presentation(&pres) {
        let l = |i: usize| doc.basis[i].clone();
        return Err(InputError::Jacobi(
            violations
                .iter()
                .map(|v| [l(v.triple.0), l(v.triple.1), l(v.triple.2)])
                .collect(),
        ));
    }
    let pmap_override = match &doc.pmap_override {
        None => None,
        Some(map) => {
            let n = doc.basis.len();
            let mut out = PMapOverride::new();
            for (label, values) in map {
                let i = index("pmapOverride", label)?;
                let mut v = vec![BigRational::from_integer(0.into()); n];
                for (target, value) in values {
                    let k = index(&format!("pmapOverride.{label}"), target)?;
                    v[k] = rational(&format!("pmapOverride.{label}.{target}"), value)?;
                }
                out.insert(i, v);
            }
            Some(out)
        }
    };
    Ok(ParsedInput {
        presentation: pres,
        pmap_override,
    })
}

fn pres_index(basis: &[String], label: &str) -> Option<usize> {
    basis.iter().position(|l| l == label)
}

fn rational(loc: &str, s: &str) -> Result<BigRational, InputError> {
    parse_rational(s).ok_or_else(|| parse_error(loc, format!("{s:?} is not of the form a or a/b with b > 0")))
}

/// The document describing a presentation; brackets are listed for `i < j`
/// in basis order.
pub fn to_document(pres: &LieAlgebraPresentation, pmap_override: Option<&PMapOverride>) -> InputDocument {
    let labels = pres.labels();
    let n = pres.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms = pres.bracket_of(i, j);
            if terms.is_empty() {
                continue;
            }
            brackets.push(BracketEntry {
                left: labels[i].clone(),
                right: labels[j].clone(),
                result: terms
                    .iter()
                    .map(|(k, c)| (labels[*k].clone(), render_rational(c)))
                    .collect(),
            });
        }
    }
    let pmap_override = pmap_override.map(|m| {
        m.iter()
            .map(|(i, v)| {
                let values = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits_zero(c))
                    .map(|(k, c)| (labels[k].clone(), render_rational(c)))
                    .collect();
                (labels[*i].clone(), values)
            })
            .collect()
    });
    InputDocument {
        name: pres.name().to_string(),
        basis: labels.to_vec(),
        brackets,
        pmap_override,
    }
}

fn num_traits_zero(c: &BigRational) -> bool {
    *c.numer() == 0.into()
}

pub fn render_input(pres: &LieAlgebraPresentation, pmap_override: Option<&PMapOverride>) -> String {
    serde_json::to_string_pretty(&to_document(pres, pmap_override)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undeclared_label() {
        let doc = r#"{"name":"t","basis":["x","y"],"brackets":[{"left":"x","right":"y","result":{"w":"1"}}]}"#;
        match parse_input(doc) {
            Err(InputError::Parse { location, .. }) => assert_eq!(location, "brackets[0].result"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_rationals_and_duplicates() {
        let doc = r#"{"name":"t","basis":["x","y"],"brackets":[{"left":"x","right":"y","result":{"x":"1/0"}}]}"#;
        assert!(matches!(parse_input(doc), Err(InputError::Parse { .. })));
        let doc = r#"{"name":"t","basis":["x","x"]}"#;
        assert_eq!(parse_input(doc), Err(InputError::DuplicateLabel("x".into())));
        assert!(matches!(parse_input("{"), Err(InputError::Parse { .. })));
    }

    #[test]
    fn jacobi_failure() {
        let doc = r#"{"name":"bad","basis":["x","y","z"],"brackets":[
            {"left":"x","right":"y","result":{"z":"1"}},
            {"left":"x","right":"z","result":{"x":"1"}}]}"#;
        assert_eq!(
            parse_input(doc),
            Err(InputError::Jacobi(vec![["x".into(), "y".into(), "z".into()]]))
        );
    }

    #[test]
    fn pmap_override_parses() {
        let doc = r#"{"name":"a","basis":["x"],"pmapOverride":{"x":{"x":"1"}}}"#;
        let parsed = parse_input(doc).unwrap();
        let o = parsed.pmap_override.unwrap();
        assert_eq!(o[&0], vec![BigRational::from_integer(1.into())]);
    }
}
