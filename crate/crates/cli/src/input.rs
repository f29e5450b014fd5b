//! Parsing of the CLI input forms.
//!
//! Permutations are a bare word (`1432`) or comma-separated letters for
//! larger sizes (`1,4,3,2`). Compositions are comma-separated parts.
//! Diagrams use the bracket form `[[],[2,3],[2],[]]` (columns of 1-based
//! rows). A polynomial is accepted as its JSON form, an array of
//! `{"exp": [..], "coef": "<int>"}` objects.

use std::str::FromStr;

use num_bigint::BigInt;

use schubert_bounds::combinat::{Composition, Permutation};
use schubert_bounds::diagrams::Diagram;
use schubert_bounds::polyring::ExponentVec;
use schubert_bounds::Poly;

use crate::CliError;

/// One parsed `compute` argument.
pub enum ComputeInput {
    Perm(Permutation),
    Comp(Composition),
    Diag(Diagram),
    Polynomial(Poly),
}

pub fn parse_permutation(s: &str) -> Result<Permutation, CliError> {
    let word: Vec<usize> = if s.contains(',') {
        s.split(',')
            .enumerate()
            .map(|(pos, part)| {
                part.trim().parse::<usize>().map_err(|_| {
                    CliError::Usage(format!(
                        "permutation letter {:?} at position {} is not a number",
                        part,
                        pos + 1
                    ))
                })
            })
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| {
                ch.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| {
                        CliError::Usage(format!(
                            "permutation letter {ch:?} at position {} is not a digit 1-9 \
                             (use the comma form for larger words)",
                            pos + 1
                        ))
                    })
            })
            .collect::<Result<_, _>>()?
    };
    Permutation::from_word(word).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_composition(s: &str) -> Result<Composition, CliError> {
    let parts: Vec<u32> = s
        .split(',')
        .enumerate()
        .map(|(pos, part)| {
            part.trim().parse::<u32>().map_err(|_| {
                CliError::Usage(format!(
                    "composition part {:?} at position {} is not a nonnegative integer",
                    part,
                    pos + 1
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    if parts.is_empty() {
        return Err(CliError::Usage(
            "composition needs at least one part".into(),
        ));
    }
    Ok(Composition::new(parts))
}

pub fn parse_diagram(s: &str) -> Result<Diagram, CliError> {
    let value: serde_json::Value = serde_json::from_str(s)
        .map_err(|e| CliError::Usage(format!("diagram is not valid JSON: {e}")))?;
    let columns = value
        .as_array()
        .ok_or_else(|| CliError::Usage("diagram must be an array of columns".into()))?;
    let mut cols = Vec::with_capacity(columns.len());
    for (j, col) in columns.iter().enumerate() {
        let rows = col.as_array().ok_or_else(|| {
            CliError::Usage(format!("column {} must be an array of row indices", j + 1))
        })?;
        let mut parsed = Vec::with_capacity(rows.len());
        for r in rows {
            let row = r.as_u64().ok_or_else(|| {
                CliError::Usage(format!(
                    "row index {r} in column {} is not an integer",
                    j + 1
                ))
            })?;
            parsed.push(row as usize);
        }
        cols.push(parsed);
    }
    Diagram::new(cols).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_poly_json(value: &serde_json::Value) -> Result<Poly, CliError> {
    let terms = value
        .as_array()
        .ok_or_else(|| CliError::Usage("polynomial JSON must be an array of terms".into()))?;
    let mut n: Option<usize> = None;
    let mut parsed = Vec::with_capacity(terms.len());
    for (idx, term) in terms.iter().enumerate() {
        let obj = term.as_object().ok_or_else(|| {
            CliError::Usage(format!("term {idx} must be an object with exp and coef"))
        })?;
        let exp = obj
            .get("exp")
            .and_then(|e| e.as_array())
            .ok_or_else(|| CliError::Usage(format!("term {idx} is missing an exp array")))?;
        let exps: Vec<u32> = exp
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|x| x as u32)
                    .ok_or_else(|| CliError::Usage(format!("term {idx} has a bad exponent {v}")))
            })
            .collect::<Result<_, _>>()?;
        match n {
            None => n = Some(exps.len()),
            Some(m) if m != exps.len() => {
                return Err(CliError::Usage(format!(
                    "term {idx} has {} exponents, expected {m}",
                    exps.len()
                )))
            }
            _ => {}
        }
        let coef_str = obj
            .get("coef")
            .and_then(|c| c.as_str())
            .ok_or_else(|| CliError::Usage(format!("term {idx} is missing a string coef")))?;
        let coef = BigInt::from_str(coef_str).map_err(|_| {
            CliError::Usage(format!("term {idx} has a non-integer coef {coef_str:?}"))
        })?;
        parsed.push((ExponentVec::new(exps), coef));
    }
    let n = n.ok_or_else(|| {
        CliError::Usage("empty polynomial JSON is ambiguous; give at least one term".into())
    })?;
    Ok(Poly::from_terms(n, parsed))
}

/// Dispatch on the surface form: brackets mean a diagram or a polynomial,
/// commas mean a composition, a bare word means a permutation.
pub fn parse_flexible(s: &str) -> Result<ComputeInput, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        let value: serde_json::Value = serde_json::from_str(t)
            .map_err(|e| CliError::Usage(format!("input is not valid JSON: {e}")))?;
        let is_poly = value
            .as_array()
            .is_some_and(|a| a.first().is_some_and(|v| v.is_object()));
        if is_poly {
            return Ok(ComputeInput::Polynomial(parse_poly_json(&value)?));
        }
        return Ok(ComputeInput::Diag(parse_diagram(t)?));
    }
    if t.contains(',') {
        return Ok(ComputeInput::Comp(parse_composition(t)?));
    }
    Ok(ComputeInput::Perm(parse_permutation(t)?))
}
