//! The JSON description format for multi-ring spaces.
//!
//! ```json
//! {
//!   "universe": ["a0", "a1", "b0", "b1", "b2"],
//!   "rings": [
//!     { "name": "Z2", "elements": ["a0", "a1"], "cyclic": 2 },
//!     {
//!       "name": "Z3",
//!       "elements": ["b0", "b1", "b2"],
//!       "add": [["b0", "b1", "b2"], ["b1", "b2", "b0"], ["b2", "b0", "b1"]],
//!       "mul": [["b0", "b0", "b0"], ["b0", "b1", "b2"], ["b0", "b2", "b1"]]
//!     }
//!   ],
//!   "space": ["Z2", "Z3"]
//! }
//! ```
//!
//! A ring is either `"cyclic": n`, which places `Z_n` on its elements with
//! `elements[k]` standing for the residue `k`, or a pair of `add`/`mul`
//! tables whose row and column `k` belong to `elements[k]`. The optional
//! `space` lists the rings making up the space, by name and in order; without
//! it every ring is used in declaration order.

use serde::Deserialize;
use thiserror::Error;

use crate::element::Universe;
use crate::error::Error;
use crate::multispace::{build_multispace, MultiRingSpace};
use crate::ring::{make_ring_from_tables, FiniteRing};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown key {key:?} at line {line}, column {column}")]
    UnknownKey {
        line: usize,
        column: usize,
        key: String,
    },
    #[error("{field}: label {label:?} appears more than once")]
    DuplicateLabel { field: String, label: String },
    #[error("{field}: expected {expected} entries, found {found}")]
    TableShape {
        field: String,
        expected: usize,
        found: usize,
    },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingBody {
    Cyclic(usize),
    Tables {
        add: Vec<Vec<String>>,
        mul: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub body: RingBody,
}

/// A parsed description, checked for shape and label references but not yet
/// for ring axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    pub rings: Vec<RingDocument>,
    pub space: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    universe: Vec<String>,
    rings: Vec<RawRing>,
    #[serde(default)]
    space: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    name: String,
    elements: Vec<String>,
    #[serde(default)]
    cyclic: Option<usize>,
    #[serde(default)]
    add: Option<Vec<Vec<String>>>,
    #[serde(default)]
    mul: Option<Vec<Vec<String>>>,
}

fn json_error(e: serde_json::Error) -> ParseError {
    let (line, column) = (e.line(), e.column());
    let text = e.to_string();
    let message = match text.rfind(" at line ") {
        Some(cut) => text[..cut].to_string(),
        None => text,
    };
    if let Some(rest) = message.strip_prefix("unknown field `") {
        let key = rest.split('`').next().unwrap_or_default().to_string();
        return ParseError::UnknownKey { line, column, key };
    }
    ParseError::Syntax {
        line,
        column,
        message,
    }
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

fn check_distinct(field: &str, labels: &[String]) -> Result<(), ParseError> {
    let mut seen = std::collections::HashSet::new();
    for label in labels {
        if !seen.insert(label) {
            return Err(ParseError::DuplicateLabel {
                field: field.to_string(),
                label: label.clone(),
            });
        }
    }
    Ok(())
}

fn check_table(
    field: String,
    table: &[Vec<String>],
    n: usize,
    universe: &Universe,
) -> Result<(), ParseError> {
    if table.len() != n {
        return Err(ParseError::TableShape {
            field,
            expected: n,
            found: table.len(),
        });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(ParseError::TableShape {
                field: format!("{field}[{i}]"),
                expected: n,
                found: row.len(),
            });
        }
        if let Some((j, cell)) = row
            .iter()
            .enumerate()
            .find(|(_, c)| universe.id(c).is_none())
        {
            return Err(invalid(
                format!("{field}[{i}][{j}]"),
                format!("unknown label {cell:?}"),
            ));
        }
    }
    Ok(())
}

/// Parses and shape-checks a description. Ring axioms and mixed laws are left
/// to [`SpaceDocument::build`].
pub fn parse_spec(text: &str) -> Result<SpaceDocument, ParseError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(json_error)?;
    if let Some(position) = raw.universe.iter().position(String::is_empty) {
        return Err(invalid(format!("universe[{position}]"), "empty label"));
    }
    check_distinct("universe", &raw.universe)?;
    let universe = Universe::new(&raw.universe).map_err(|e| invalid("universe", e.to_string()))?;

    let mut rings = Vec::with_capacity(raw.rings.len());
    for (k, ring) in raw.rings.into_iter().enumerate() {
        let at = |what: &str| format!("rings[{k}].{what}");
        check_distinct(&at("elements"), &ring.elements)?;
        if let Some(label) = ring.elements.iter().find(|l| universe.id(l).is_none()) {
            return Err(invalid(at("elements"), format!("unknown label {label:?}")));
        }
        let n = ring.elements.len();
        if n == 0 {
            return Err(invalid(at("elements"), "a ring needs at least one element"));
        }
        let body = match (ring.cyclic, ring.add, ring.mul) {
            (Some(m), None, None) => {
                if m != n {
                    return Err(ParseError::TableShape {
                        field: at("elements"),
                        expected: m,
                        found: n,
                    });
                }
                RingBody::Cyclic(m)
            }
            (None, Some(add), Some(mul)) => {
                check_table(at("add"), &add, n, &universe)?;
                check_table(at("mul"), &mul, n, &universe)?;
                RingBody::Tables { add, mul }
            }
            (None, Some(_), None) => {
                return Err(invalid(at("mul"), "missing multiplication table"))
            }
            (None, None, Some(_)) => return Err(invalid(at("add"), "missing addition table")),
            (None, None, None) => {
                return Err(invalid(
                    format!("rings[{k}]"),
                    "needs \"cyclic\" or \"add\" and \"mul\"",
                ))
            }
            (Some(_), _, _) => {
                return Err(invalid(
                    format!("rings[{k}]"),
                    "\"cyclic\" excludes explicit tables",
                ))
            }
        };
        rings.push(RingDocument {
            name: ring.name,
            elements: ring.elements,
            body,
        });
    }

    if let Some(space) = &raw.space {
        check_distinct("space", space)?;
        for (i, name) in space.iter().enumerate() {
            match rings.iter().filter(|r| r.name == *name).count() {
                1 => {}
                0 => {
                    return Err(invalid(
                        format!("space[{i}]"),
                        format!("no ring named {name:?}"),
                    ))
                }
                _ => {
                    return Err(invalid(
                        format!("space[{i}]"),
                        format!("ring name {name:?} is ambiguous"),
                    ))
                }
            }
        }
    }

    Ok(SpaceDocument {
        universe: raw.universe,
        rings,
        space: raw.space,
    })
}

impl SpaceDocument {
    /// Describes an in-memory space with explicit tables over each ring's
    /// elements in canonical order.
    pub fn from_space(m: &MultiRingSpace) -> Self {
        let labels = |row: Vec<usize>, r: &FiniteRing| -> Vec<String> {
            row.into_iter()
                .map(|p| m.label(r.element(p)).to_string())
                .collect()
        };
        let rings = m
            .rings()
            .iter()
            .map(|r| RingDocument {
                name: r.name().to_string(),
                elements: m.labels_of(r.elements()),
                body: RingBody::Tables {
                    add: r.add_rows().into_iter().map(|row| labels(row, r)).collect(),
                    mul: r.mul_rows().into_iter().map(|row| labels(row, r)).collect(),
                },
            })
            .collect();
        Self {
            universe: m.universe().labels().to_vec(),
            rings,
            space: None,
        }
    }

    /// The rings that make up the space, in order.
    pub fn selected_rings(&self) -> Vec<&RingDocument> {
        match &self.space {
            None => self.rings.iter().collect(),
            Some(names) => names
                .iter()
                .filter_map(|n| self.rings.iter().find(|r| r.name == *n))
                .collect(),
        }
    }

    /// Builds and validates the described space.
    pub fn build(&self, limits: &Limits) -> Result<MultiRingSpace, Error> {
        let universe = Universe::new(&self.universe)?;
        let mut rings = Vec::new();
        for (index, doc) in self.selected_rings().into_iter().enumerate() {
            limits.check_ring_size("ring", doc.elements.len())?;
            let ring = match &doc.body {
                RingBody::Cyclic(_) => {
                    FiniteRing::cyclic_on(doc.name.clone(), &universe.ids(&doc.elements)?)
                }
                RingBody::Tables { add, mul } => {
                    make_ring_from_tables(&universe, &doc.name, &doc.elements, add, mul)
                }
            };
            rings.push(ring.map_err(|e| match e {
                Error::AxiomViolation(report) => Error::RingInvalid {
                    index,
                    name: doc.name.clone(),
                    report,
                },
                other => other,
            })?);
        }
        build_multispace(universe, rings, limits)
    }

    /// Stable text form: fixed key order, one table row per line.
    pub fn to_text(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings always serialize");
        let list = |items: &[String]| {
            let quoted: Vec<String> = items.iter().map(|s| q(s)).collect();
            format!("[{}]", quoted.join(", "))
        };
        let table = |rows: &[Vec<String>]| {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| format!("        {}", list(r)))
                .collect();
            format!("[\n{}\n      ]", lines.join(",\n"))
        };

        let mut out = String::from("{\n");
        out.push_str(&format!("  \"universe\": {},\n", list(&self.universe)));
        out.push_str("  \"rings\": [");
        for (k, ring) in self.rings.iter().enumerate() {
            out.push_str(if k == 0 { "\n" } else { ",\n" });
            out.push_str("    {\n");
            out.push_str(&format!("      \"name\": {},\n", q(&ring.name)));
            out.push_str(&format!("      \"elements\": {},\n", list(&ring.elements)));
            match &ring.body {
                RingBody::Cyclic(n) => out.push_str(&format!("      \"cyclic\": {n}\n")),
                RingBody::Tables { add, mul } => {
                    out.push_str(&format!("      \"add\": {},\n", table(add)));
                    out.push_str(&format!("      \"mul\": {}\n", table(mul)));
                }
            }
            out.push_str("    }");
        }
        out.push_str(if self.rings.is_empty() { "]" } else { "\n  ]" });
        if let Some(space) = &self.space {
            out.push_str(&format!(",\n  \"space\": {}", list(space)));
        }
        out.push_str("\n}\n");
        out
    }
}

/// Writes a space in the description format; parsing and building the result
/// gives back an equal space.
pub fn serialize_space(m: &MultiRingSpace) -> String {
    SpaceDocument::from_space(m).to_text()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4Z6: &str = r#"{
      "universe": ["a0","a1","a2","a3","b0","b1","b2","b3","b4","b5"],
      "rings": [
        {"name": "Z4", "elements": ["a0","a1","a2","a3"], "cyclic": 4},
        {"name": "Z6", "elements": ["b0","b1","b2","b3","b4","b5"], "cyclic": 6}
      ]
    }"#;

    #[test]
    fn cyclic_fixture_builds_and_round_trips() {
        let doc = parse_spec(Z4Z6).unwrap();
        let m = doc.build(&Limits::default()).unwrap();
        assert_eq!(m.ring_count(), 2);
        assert_eq!(parse_spec(&doc.to_text()).unwrap(), doc);
        let text = serialize_space(&m);
        let back = parse_spec(&text)
            .unwrap()
            .build(&Limits::default())
            .unwrap();
        assert_eq!(back, m);
        assert_eq!(serialize_space(&back), text);
    }

    #[test]
    fn duplicate_universe_label() {
        let text = r#"{"universe": ["a0", "a1", "a0"], "rings": []}"#;
        assert_eq!(
            parse_spec(text),
            Err(ParseError::DuplicateLabel {
                field: "universe".into(),
                label: "a0".into()
            })
        );
    }

    #[test]
    fn ragged_table() {
        let labels: Vec<String> = (0..6).map(|i| format!("\"e{i}\"")).collect();
        let row = format!("[{}]", labels.join(","));
        let five = vec![row.clone(); 5].join(",");
        let six = vec![row; 6].join(",");
        let text = format!(
            r#"{{"universe": [{l}], "rings": [{{"name": "R", "elements": [{l}], "add": [{five}], "mul": [{six}]}}]}}"#,
            l = labels.join(",")
        );
        assert_eq!(
            parse_spec(&text),
            Err(ParseError::TableShape {
                field: "rings[0].add".into(),
                expected: 6,
                found: 5
            })
        );
    }

    #[test]
    fn unknown_key_has_a_location() {
        let text = "{\n  \"universe\": [\"a\"],\n  \"ringz\": []\n}";
        match parse_spec(text) {
            Err(ParseError::UnknownKey { line, key, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(key, "ringz");
            }
            other => panic!("unexpected {other:?}"),
        }
        let nested = r#"{"universe": ["a"], "rings": [{"name": "R", "elements": ["a"], "cyclic": 1, "unit": "a"}]}"#;
        assert!(
            matches!(parse_spec(nested), Err(ParseError::UnknownKey { key, .. }) if key == "unit")
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse_spec("{\"universe\": [}"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(parse_spec("{}"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn reference_errors() {
        let text =
            r#"{"universe": ["a"], "rings": [{"name": "R", "elements": ["b"], "cyclic": 1}]}"#;
        assert!(
            matches!(parse_spec(text), Err(ParseError::Invalid { field, .. }) if field == "rings[0].elements")
        );
        let text = r#"{"universe": ["a"], "rings": [{"name": "R", "elements": ["a"], "cyclic": 1}], "space": ["S"]}"#;
        assert!(
            matches!(parse_spec(text), Err(ParseError::Invalid { field, .. }) if field == "space[0]")
        );
        let text = r#"{"universe": ["a", "b"], "rings": [{"name": "R", "elements": ["a", "b"], "cyclic": 3}]}"#;
        assert!(matches!(
            parse_spec(text),
            Err(ParseError::TableShape { .. })
        ));
    }

    #[test]
    fn space_selects_rings() {
        let text = r#"{"universe": ["a0", "a1", "b0"],
          "rings": [{"name": "A", "elements": ["a0", "a1"], "cyclic": 2},
                    {"name": "B", "elements": ["b0"], "cyclic": 1}],
          "space": ["B"]}"#;
        let m = parse_spec(text).unwrap().build(&Limits::default()).unwrap();
        assert_eq!(m.ring_count(), 1);
        assert_eq!(m.rings()[0].name(), "B");
    }

    #[test]
    fn axiom_failures_name_the_ring() {
        let text = r#"{"universe": ["x", "y"],
          "rings": [{"name": "Bad", "elements": ["x", "y"],
                     "add": [["x", "y"], ["y", "y"]], "mul": [["x", "x"], ["x", "y"]]}]}"#;
        let err = parse_spec(text)
            .unwrap()
            .build(&Limits::default())
            .unwrap_err();
        assert!(matches!(err, Error::RingInvalid { index: 0, .. }));
    }
}
