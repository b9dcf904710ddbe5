//! Fixture cases shared by the golden and acceptance tests.
//!
//! Each case runs the binary on a fixture and compares stdout with
//! `tests/golden/<name>.out` (stderr appended after a `--- stderr` line)
//! and the exit code with the expected one.
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("validate_z4z6", &["validate", "z4z6.json"], 0),
    case(
        "validate_z4z6_json",
        &["validate", "z4z6.json", "--json"],
        0,
    ),
    case("validate_dup_z2", &["validate", "dup_z2.json"], 0),
    case(
        "validate_mixed_violation",
        &["validate", "mixed_violation.json"],
        1,
    ),
    case(
        "validate_mixed_violation_json",
        &["validate", "mixed_violation.json", "--json"],
        1,
    ),
    case("validate_bad_axiom", &["validate", "bad_axiom.json"], 1),
    case(
        "subspace_t21",
        &[
            "subspace",
            "z4z6.json",
            "--elements",
            "a0,a2,b0",
            "--ops",
            "1,2",
        ],
        0,
    ),
    case(
        "subspace_t22_fails",
        &[
            "subspace",
            "z4z6.json",
            "--elements",
            "a0,a1,b0",
            "--ops",
            "1,2",
            "--criterion",
            "t22",
        ],
        1,
    ),
    case(
        "subspace_direct_json",
        &[
            "subspace",
            "z4z6.json",
            "--elements",
            "a0,a2,b0,b3",
            "--ops",
            "1,2",
            "--criterion",
            "direct",
            "--json",
        ],
        0,
    ),
    case(
        "ideal_t23",
        &[
            "ideal",
            "z4z6.json",
            "--elements",
            "a0,a2,b0",
            "--ops",
            "1,2",
        ],
        0,
    ),
    case(
        "ideal_direct_fails_json",
        &[
            "ideal",
            "z4z6.json",
            "--elements",
            "a0,a2,b0,b1",
            "--ops",
            "1,2",
            "--criterion",
            "direct",
            "--json",
        ],
        1,
    ),
    case("ideals_z6", &["ideals", "z6.json", "--ring", "1"], 0),
    case(
        "ideals_z4z6_json",
        &["ideals", "z4z6.json", "--ring", "2", "--json"],
        0,
    ),
    case(
        "ideals_even12",
        &["ideals", "even12.json", "--ring", "1"],
        0,
    ),
    case(
        "chain_z4z6_json",
        &["chain", "z4z6.json", "--order", "1,2", "--json"],
        0,
    ),
    case(
        "chain_z4z6_reversed",
        &["chain", "z4z6.json", "--order", "2,1"],
        0,
    ),
    case("artin_z4z6", &["artin", "z4z6.json"], 0),
    case("artin_z6_json", &["artin", "z6.json", "--json"], 0),
    case("decompose_z4z6", &["decompose", "z4z6.json"], 0),
    case("decompose_z6_json", &["decompose", "z6.json", "--json"], 0),
    case("decompose_even12", &["decompose", "even12.json"], 0),
    case(
        "idempotents_z6",
        &["idempotents", "z6.json", "--ring", "1"],
        0,
    ),
    case(
        "idempotents_even12_json",
        &["idempotents", "even12.json", "--ring", "1", "--json"],
        0,
    ),
    case("multifield_z4z6", &["multifield", "z4z6.json"], 1),
    case(
        "multifield_z2z3_json",
        &["multifield", "z2z3.json", "--json"],
        0,
    ),
    case("error_unknown_key", &["validate", "unknown_key.json"], 2),
    case(
        "error_duplicate_label_json",
        &["validate", "duplicate_label.json", "--json"],
        2,
    ),
    case("error_syntax", &["artin", "syntax_error.json"], 2),
    case("error_ring_index", &["ideals", "z6.json", "--ring", "2"], 2),
    case(
        "error_unknown_element",
        &["subspace", "z4z6.json", "--elements", "c9", "--ops", "1"],
        2,
    ),
    case("error_invalid_space", &["chain", "mixed_violation.json"], 2),
    case(
        "error_budget_json",
        &[
            "ideals",
            "z6.json",
            "--ring",
            "1",
            "--subset-budget",
            "2",
            "--json",
        ],
        3,
    ),
    case(
        "error_ring_cap",
        &["decompose", "z4z6.json", "--max-ring-size", "4"],
        3,
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("tests/fixtures").join(name)
}

/// Exit code and captured output; stderr, when present, follows a separator.
pub fn run(args: &[&str]) -> (i32, String) {
    let resolved: Vec<String> = args
        .iter()
        .map(|a| {
            if a.ends_with(".json") {
                fixture(a).display().to_string()
            } else {
                a.to_string()
            }
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_multiring"))
        .args(&resolved)
        .output()
        .expect("binary runs");
    let mut text = String::from_utf8(out.stdout).expect("utf-8");
    let stderr = String::from_utf8(out.stderr).expect("utf-8");
    if !stderr.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&stderr);
    }
    (out.status.code().expect("exit code"), text)
}

pub fn check_golden(path: &Path, actual: &str) -> Result<(), String> {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(path, actual).expect("golden file written");
        return Ok(());
    }
    let expected = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{}\n--- expected\n{expected}--- actual\n{actual}",
            path.display()
        ))
    }
}

/// Runs every case; returns one message per mismatch.
pub fn golden_failures() -> Vec<String> {
    let mut failures = Vec::new();
    for c in CASES {
        let (code, stdout) = run(c.args);
        if code != c.code {
            failures.push(format!("{}: exit {code}, expected {}", c.name, c.code));
        }
        let path = crate_dir()
            .join("tests/golden")
            .join(format!("{}.out", c.name));
        if let Err(e) = check_golden(&path, &stdout) {
            failures.push(e);
        }
    }
    failures
}
