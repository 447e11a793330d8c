//! The JSON instance format:
//!
//! ```json
//! {
//!   "universe": 3,
//!   "strategies": [[0, 1], ["e2", "e3"], ["e3"], [0]],
//!   "alpha": "1/4",
//!   "beta": "1"
//! }
//! ```
//!
//! `universe` is either an element count or an array of distinct labels.
//! Strategy entries may be 0-based element indices or labels; anything
//! out of range or unknown is rejected with a diagnostic naming the field.
//! `alpha`/`beta` are optional `p/q` strings (both or neither).

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::params::GameParams;
use crate::strategy::JointStrategy;
use crate::universe::{ElementSet, Universe};

#[derive(Deserialize)]
struct RawInstance {
    universe: Value,
    strategies: Vec<Vec<Value>>,
    #[serde(default)]
    alpha: Option<String>,
    #[serde(default)]
    beta: Option<String>,
}

fn field_err(field: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::InstanceField { field: field.into(), detail: detail.into() }
}

fn parse_universe(value: &Value) -> Result<Universe> {
    match value {
        Value::Number(n) => {
            let size = n
                .as_u64()
                .ok_or_else(|| field_err("universe", "size must be a non-negative integer"))?;
            Universe::of_size(size as usize)
        }
        Value::Array(entries) => {
            let labels = entries
                .iter()
                .map(|v| {
                    v.as_str().map(str::to_owned).ok_or_else(|| {
                        field_err("universe", "labels must be strings")
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Universe::with_labels(labels)
        }
        _ => Err(field_err(
            "universe",
            "expected an element count or an array of labels",
        )),
    }
}

fn parse_element(universe: &Universe, value: &Value, field: &str) -> Result<usize> {
    match value {
        Value::Number(n) => {
            let index = n
                .as_u64()
                .ok_or_else(|| field_err(field, "element indices must be non-negative"))?
                as usize;
            if index >= universe.size() {
                return Err(field_err(
                    field,
                    format!("index {index} out of range (universe has {} elements)", universe.size()),
                ));
            }
            Ok(index)
        }
        Value::String(label) => universe
            .index_of(label)
            .ok_or_else(|| field_err(field, format!("unknown element `{label}`"))),
        _ => Err(field_err(field, "expected an element index or label")),
    }
}

/// Parses an instance file. Game parameters are returned when present.
pub fn parse_instance(json: &str) -> Result<(JointStrategy, Option<GameParams>)> {
    let raw: RawInstance = serde_json::from_str(json)?;
    let universe = parse_universe(&raw.universe)?;

    let mut strategies = Vec::with_capacity(raw.strategies.len());
    for (i, entries) in raw.strategies.iter().enumerate() {
        let mut set = ElementSet::EMPTY;
        for (j, entry) in entries.iter().enumerate() {
            let field = format!("strategies[{i}][{j}]");
            set = set.with(parse_element(&universe, entry, &field)?);
        }
        strategies.push(set);
    }
    if strategies.is_empty() {
        return Err(field_err("strategies", "at least one agent is required"));
    }
    let joint = JointStrategy::new(universe, strategies)?;

    let params = match (&raw.alpha, &raw.beta) {
        (Some(alpha), Some(beta)) => {
            let alpha = alpha
                .parse()
                .map_err(|e: Error| field_err("alpha", e.to_string()))?;
            let beta = beta
                .parse()
                .map_err(|e: Error| field_err("beta", e.to_string()))?;
            Some(GameParams::new(alpha, beta)?)
        }
        (None, None) => None,
        (Some(_), None) => return Err(field_err("beta", "missing while alpha is set")),
        (None, Some(_)) => return Err(field_err("alpha", "missing while beta is set")),
    };
    Ok((joint, params))
}

/// Writes a profile back out in the instance format, with labels.
pub fn instance_json(joint: &JointStrategy, params: Option<&GameParams>) -> Value {
    let universe = joint.universe();
    let labels: Vec<Value> = (0..universe.size())
        .map(|i| Value::String(universe.label(i)))
        .collect();
    let strategies: Vec<Value> = joint
        .to_labels()
        .into_iter()
        .map(|sets| Value::Array(sets.into_iter().map(Value::String).collect()))
        .collect();
    let mut object = serde_json::Map::new();
    object.insert("universe".into(), Value::Array(labels));
    object.insert("strategies".into(), Value::Array(strategies));
    if let Some(p) = params {
        object.insert("alpha".into(), Value::String(p.alpha().to_string()));
        object.insert("beta".into(), Value::String(p.beta().to_string()));
    }
    Value::Object(object)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HIRING: &str = r#"{
        "universe": ["e1", "e2", "e3"],
        "strategies": [["e1", "e2"], ["e2", "e3"], ["e3"], ["e1"]],
        "alpha": "1/4",
        "beta": "1"
    }"#;

    #[test]
    fn parses_labelled_instances() {
        let (joint, params) = parse_instance(HIRING).unwrap();
        assert_eq!(joint.agent_count(), 4);
        assert_eq!(joint.strategy(0).len(), 2);
        let params = params.unwrap();
        assert_eq!(params.alpha().to_string(), "1/4");
    }

    #[test]
    fn parses_indexed_instances_without_params() {
        let (joint, params) =
            parse_instance(r#"{"universe": 2, "strategies": [[0], [1], []]}"#).unwrap();
        assert_eq!(joint.agent_count(), 3);
        assert!(params.is_none());
        assert!(joint.strategy(2).is_empty());
    }

    #[test]
    fn rejects_unknown_labels_and_bad_indices_by_field() {
        let err = parse_instance(r#"{"universe": 2, "strategies": [[0], ["e9"]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("strategies[1][0]"), "got: {err}");
        assert!(err.contains("e9"), "got: {err}");

        let err = parse_instance(r#"{"universe": 2, "strategies": [[5]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("strategies[0][0]"), "got: {err}");
        assert!(err.contains("out of range"), "got: {err}");
    }

    #[test]
    fn rejects_half_specified_or_non_positive_params() {
        let err = parse_instance(r#"{"universe": 1, "strategies": [[0]], "alpha": "1/2"}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("beta"), "got: {err}");

        let err = parse_instance(
            r#"{"universe": 1, "strategies": [[0]], "alpha": "0", "beta": "1"}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("alpha"), "got: {err}");
    }

    #[test]
    fn round_trips_through_the_writer() {
        let (joint, params) = parse_instance(HIRING).unwrap();
        let json = instance_json(&joint, params.as_ref()).to_string();
        let (again, params_again) = parse_instance(&json).unwrap();
        assert_eq!(joint, again);
        assert_eq!(params, params_again);
    }
}
