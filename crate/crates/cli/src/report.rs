use multiring::{ElementId, MultiRingSpace};
use serde_json::{Map, Value};

/// Keys whose numeric values are element ids in serialized library types.
const ELEMENT_KEYS: &[&str] = &["x", "y", "z", "result", "r", "a", "lhs", "rhs", "e", "f"];
/// Keys whose numeric values are 0-based ring indices.
const RING_KEYS: &[&str] = &["ring", "i", "j"];

pub struct Report {
    pub holds: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(holds: bool, text: String, json: Value) -> Self {
        Self { holds, text, json }
    }
}

pub fn labels<'a, I>(m: &MultiRingSpace, ids: I) -> Vec<String>
where
    I: IntoIterator<Item = &'a ElementId>,
{
    m.labels_of(ids)
}

pub fn set_text<'a, I>(m: &MultiRingSpace, ids: I) -> String
where
    I: IntoIterator<Item = &'a ElementId>,
{
    format!("{{{}}}", labels(m, ids).join(", "))
}

/// Replaces element ids with labels and makes ring indices 1-based.
pub fn relabel(m: &MultiRingSpace, value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut out = Map::new();
            for (key, v) in map {
                let v = match (&v, key.as_str()) {
                    (Value::Number(n), k) if ELEMENT_KEYS.contains(&k) => {
                        let id = ElementId(n.as_u64().unwrap_or_default() as usize);
                        Value::String(m.label(id).to_string())
                    }
                    (Value::Number(n), k) if RING_KEYS.contains(&k) => {
                        Value::from(n.as_u64().unwrap_or_default() + 1)
                    }
                    (Value::Array(items), "witness") => Value::Array(
                        items
                            .iter()
                            .map(|item| match item.as_u64() {
                                Some(id) => Value::String(m.label(ElementId(id as usize)).into()),
                                None => item.clone(),
                            })
                            .collect(),
                    ),
                    _ => relabel(m, v),
                };
                out.insert(key, v);
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(|v| relabel(m, v)).collect()),
        other => other,
    }
}

/// `kind key=value ..` with nested objects in parentheses.
pub fn describe(value: &Value) -> String {
    match value {
        Value::Object(map) => {
            let mut parts = Vec::new();
            if let Some(Value::String(kind)) = map.get("kind") {
                parts.push(kind.clone());
            }
            for (key, v) in map {
                if key == "kind" {
                    continue;
                }
                parts.push(match v {
                    Value::Object(_) => format!("({})", describe(v)),
                    _ => format!("{key}={}", describe(v)),
                });
            }
            parts.join(" ")
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(describe).collect();
            format!("({})", inner.join(", "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
