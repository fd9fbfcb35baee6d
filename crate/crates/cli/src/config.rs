// Copyright 2026 The scqr Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON configuration documents.
//!
//! ```json
//! {
//!   "energies": [1, 5, 4],
//!   "gammas": [0.01, 0.01, 0.01],
//!   "coupling": 0.01,
//!   "reservoirs": [
//!     {"kind": "F", "temperature": 1},
//!     {"kind": "F", "temperature": 2},
//!     {"kind": "F", "temperature": 10}
//!   ]
//! }
//! ```
//!
//! Array positions in keys and error messages are 1-based, matching the
//! qubit numbering: `reservoirs.2.kind` is the reservoir of qubit 2.

use serde_json::{Map, Value};

use scqr_core::dynamics::{QubitSpec, SystemConfig};
use scqr_core::reservoir::{ReservoirKind, ReservoirSpec};

use crate::error::ConfigError;

type Result<T> = std::result::Result<T, ConfigError>;

/// Document equivalent to [`SystemConfig::reference`].
pub fn default_document() -> Value {
    let c = SystemConfig::reference();
    to_document(&c)
}

pub fn to_document(c: &SystemConfig) -> Value {
    serde_json::json!({
        "energies": c.qubits.iter().map(|q| q.energy_gap).collect::<Vec<_>>(),
        "gammas": c.qubits.iter().map(|q| q.dissipation).collect::<Vec<_>>(),
        "coupling": c.coupling,
        "reservoirs": c.reservoirs.iter().map(|r| serde_json::json!({
            "kind": r.kind.to_string(),
            "temperature": r.temperature,
        })).collect::<Vec<_>>(),
    })
}

pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| ConfigError::Syntax(e.to_string()))
}

/// Parses and validates a configuration document. Resonance and
/// temperature-ordering problems are not errors; see
/// [`SystemConfig::warnings`].
pub fn parse_config(text: &str) -> Result<SystemConfig> {
    config_from_value(&parse_document(text)?)
}

pub fn config_from_value(doc: &Value) -> Result<SystemConfig> {
    let obj = doc.as_object().ok_or(ConfigError::WrongType {
        key: "<root>".into(),
        expected: "an object",
    })?;
    let energies = triple(obj, "energies")?;
    let gammas = triple(obj, "gammas")?;
    let coupling = number(field(obj, "coupling", "coupling")?, "coupling")?;
    nonnegative("coupling", coupling)?;

    let reservoirs =
        field(obj, "reservoirs", "reservoirs")?
            .as_array()
            .ok_or(ConfigError::WrongType {
                key: "reservoirs".into(),
                expected: "an array",
            })?;
    if reservoirs.len() != 3 {
        return Err(ConfigError::WrongLength {
            key: "reservoirs".into(),
            expected: 3,
            found: reservoirs.len(),
        });
    }

    let mut qubits = [QubitSpec::new(1.0, 0.0).expect("valid"); 3];
    let mut specs = [ReservoirSpec::new(ReservoirKind::Bosonic, 1.0).expect("valid"); 3];
    for k in 0..3 {
        let n = k + 1;
        positive(&format!("energies.{n}"), energies[k])?;
        nonnegative(&format!("gammas.{n}"), gammas[k])?;
        qubits[k] = QubitSpec {
            energy_gap: energies[k],
            dissipation: gammas[k],
        };

        let key = format!("reservoirs.{n}");
        let r = reservoirs[k].as_object().ok_or(ConfigError::WrongType {
            key: key.clone(),
            expected: "an object",
        })?;
        let kind_key = format!("{key}.kind");
        let kind = match field(r, "kind", &kind_key)? {
            Value::String(s) => s
                .parse::<ReservoirKind>()
                .map_err(|_| ConfigError::BadKind {
                    key: kind_key.clone(),
                    found: format!("{s:?}"),
                })?,
            other => {
                return Err(ConfigError::BadKind {
                    key: kind_key,
                    found: other.to_string(),
                })
            }
        };
        let t_key = format!("{key}.temperature");
        let temperature = number(field(r, "temperature", &t_key)?, &t_key)?;
        positive(&t_key, temperature)?;
        specs[k] = ReservoirSpec { kind, temperature };
    }

    let config = SystemConfig::new(qubits, specs, coupling)
        .map_err(|e| ConfigError::Invalid(e.to_string()))?;
    Ok(config)
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str, key: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| ConfigError::MissingField(key.to_string()))
}

fn number(v: &Value, key: &str) -> Result<f64> {
    v.as_f64().ok_or(ConfigError::WrongType {
        key: key.to_string(),
        expected: "a number",
    })
}

fn triple(obj: &Map<String, Value>, name: &str) -> Result<[f64; 3]> {
    let arr = field(obj, name, name)?
        .as_array()
        .ok_or(ConfigError::WrongType {
            key: name.to_string(),
            expected: "an array of 3 numbers",
        })?;
    if arr.len() != 3 {
        return Err(ConfigError::WrongLength {
            key: name.to_string(),
            expected: 3,
            found: arr.len(),
        });
    }
    let mut out = [0.0; 3];
    for (k, v) in arr.iter().enumerate() {
        out[k] = number(v, &format!("{name}.{}", k + 1))?;
    }
    Ok(out)
}

fn positive(key: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(ConfigError::NonPositiveValue {
            key: key.to_string(),
            value,
        })
    }
}

fn nonnegative(key: &str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(ConfigError::NegativeValue {
            key: key.to_string(),
            value,
        })
    }
}

/// Splits `key=value`.
pub fn parse_override(spec: &str) -> Result<(String, String)> {
    match spec.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(ConfigError::BadOverride(
            spec.to_string(),
            "expected key=value".into(),
        )),
    }
}

/// Sets a dotted key such as `reservoirs.1.temperature` in `doc`. The value
/// is read as JSON when possible and as a bare string otherwise, so both
/// `coupling=0.02` and `reservoirs.2.kind=B` work.
pub fn apply_override(doc: &mut Value, key: &str, raw: &str) -> Result<()> {
    let bad = |why: &str| ConfigError::BadOverride(format!("{key}={raw}"), why.to_string());
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let mut slot = doc;
    for part in key.split('.') {
        slot = match slot {
            Value::Object(map) => map.entry(part.to_string()).or_insert(Value::Null),
            Value::Array(items) => {
                let n: usize = part
                    .parse()
                    .map_err(|_| bad("array index must be a number"))?;
                if n == 0 || n > items.len() {
                    return Err(bad("array index out of range (positions start at 1)"));
                }
                &mut items[n - 1]
            }
            _ => return Err(bad("path goes through a scalar")),
        };
    }
    *slot = value;
    Ok(())
}
