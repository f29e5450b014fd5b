//! Canonical text and JSON rendering.
//!
//! Polynomial JSON is a lexicographically sorted array of
//! `{"exp": [e1..en], "coef": "<integer>"}`; coefficients are strings so
//! consumers never hit integer-width limits. All output is byte-stable
//! across runs.

use serde_json::{json, Value};

use schubert_bounds::diagrams::Diagram;
use schubert_bounds::Poly;

pub fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            json!({
                "exp": e.as_slice(),
                "coef": c.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn diagram_json(d: &Diagram) -> Value {
    let cols: Vec<Value> = d
        .columns()
        .iter()
        .map(|col| Value::Array(col.iter().map(|&r| json!(r)).collect()))
        .collect();
    Value::Array(cols)
}

/// Compact deterministic serialization (serde_json maps are ordered).
pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_poly_json;
    use num_bigint::BigInt;
    use schubert_bounds::polyring::ExponentVec;

    #[test]
    fn poly_json_round_trips_bytes() {
        let p = Poly::from_terms(
            3,
            [
                (ExponentVec::new(vec![2, 1, 0]), BigInt::from(1)),
                (ExponentVec::new(vec![0, 1, 1]), BigInt::from(-7)),
            ],
        );
        let rendered = to_json_string(&poly_json(&p));
        let reparsed = parse_poly_json(&serde_json::from_str(&rendered).unwrap()).unwrap();
        assert_eq!(reparsed, p);
        assert_eq!(to_json_string(&poly_json(&reparsed)), rendered);
    }
}
