//! Golden-file tests for the command-line tool.

mod common;

use std::fs;

use common::{fixture, golden_failures, run, CASES};
use multiring::multispace::{
    is_ideal_subspace_by_ideals, is_subspace_by_subrings, MultiRingSpace, SubsetSelection,
};
use multiring::{parse_spec, Limits};

#[test]
fn golden_outputs() {
    let failures = golden_failures();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_subcommand_has_a_golden_case() {
    for sub in [
        "validate",
        "subspace",
        "ideal",
        "ideals",
        "chain",
        "artin",
        "decompose",
        "idempotents",
        "multifield",
    ] {
        let covered = CASES.iter().any(|c| c.args[0] == sub && c.code < 2);
        assert!(covered, "no golden case for {sub}");
    }
}

#[test]
fn json_output_is_byte_stable() {
    for c in CASES.iter().filter(|c| c.args.contains(&"--json")) {
        let first = run(c.args);
        let second = run(c.args);
        assert_eq!(first, second, "{} differs between runs", c.name);
        let stdout = first.1.split("--- stderr\n").next().unwrap_or_default();
        serde_json::from_str::<serde_json::Value>(stdout)
            .unwrap_or_else(|e| panic!("{}: not JSON: {e}", c.name));
    }
}

#[test]
fn chain_json_has_five_terms() {
    let (code, out) = run(&["chain", "z4z6.json", "--order", "1,2", "--json"]);
    assert_eq!(code, 0);
    let terms: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(terms.len(), 5);
}

#[test]
fn seed_is_accepted_and_ignored() {
    let plain = run(&["decompose", "z4z6.json", "--json"]);
    let seeded = run(&["decompose", "z4z6.json", "--json", "--seed", "7"]);
    assert_eq!(plain, seeded);
}

#[test]
fn missing_file_is_invalid_input() {
    let (code, _) = run(&["validate", "does_not_exist.json"]);
    assert_eq!(code, 2);
}

fn space(name: &str) -> MultiRingSpace {
    let text = fs::read_to_string(fixture(name)).unwrap();
    parse_spec(&text)
        .unwrap()
        .build(&Limits::default())
        .unwrap()
}

/// Verdicts printed by the tool agree with direct library calls.
#[test]
fn verdicts_match_the_library() {
    let m = space("z4z6.json");
    let labels = m.universe().labels().to_vec();
    // a spread of selections: every 37th element subset, under both ops choices
    for bits in (0u32..1 << labels.len()).step_by(37) {
        let chosen: Vec<&str> = (0..labels.len())
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| labels[i].as_str())
            .collect();
        for (ops_flag, ops) in [("1,2", vec![0, 1]), ("2", vec![1])] {
            let s: SubsetSelection = m.selection(&chosen, &ops).unwrap();
            let elements = chosen.join(",");
            let base = ["--elements", elements.as_str(), "--ops", ops_flag];
            let mut sub = vec!["subspace", "z4z6.json"];
            sub.extend(base);
            let mut ide = vec!["ideal", "z4z6.json"];
            ide.extend(base);
            let expect = |b: bool| if b { 0 } else { 1 };
            assert_eq!(
                run(&sub).0,
                expect(is_subspace_by_subrings(&m, &s).unwrap()),
                "{sub:?}"
            );
            assert_eq!(
                run(&ide).0,
                expect(is_ideal_subspace_by_ideals(&m, &s).unwrap()),
                "{ide:?}"
            );
        }
    }
}
