mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multiring::chain::{chain_is_valid, ideal_subspace_chain, is_artin, OperationOrder};
use multiring::decomposition::decompose_artin;
use multiring::multispace::{
    ideal_subspace_defect, is_ideal_subspace_by_ideals, is_ideal_subspace_direct,
    is_subspace_by_subgroups, is_subspace_by_subrings, is_subspace_direct, multi_field_defect,
    subspace_defect, MultiRingSpace, SubsetSelection,
};
use multiring::ring::{decompose_unit, idempotents, is_primitive};
use multiring::{
    enumerate_ideals, maximal_ideals, parse_spec, Error, FiniteRing, Limits, SpaceDocument,
    Universe, MAX_RING_SIZE,
};
use serde_json::{json, Value};

use report::{describe, labels, relabel, set_text, yes_no, Report};

#[derive(Parser)]
#[command(
    name = "multiring",
    version,
    about = "Analyse finite multi-ring spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Largest ring accepted
    #[arg(long, global = true, default_value_t = MAX_RING_SIZE)]
    max_ring_size: usize,

    /// Largest number of candidates any exhaustive search may visit
    #[arg(long, global = true, default_value_t = 1 << 20)]
    subset_budget: u64,

    /// Reserved; every analysis is deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check ring axioms and mixed laws
    Validate { file: PathBuf },
    /// Decide whether a selection is a subspace
    Subspace {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        elements: Vec<String>,
        /// 1-based ring indices
        #[arg(long, value_delimiter = ',', required = true)]
        ops: Vec<usize>,
        #[arg(long, value_enum, default_value_t = SubspaceCriterion::T21)]
        criterion: SubspaceCriterion,
    },
    /// Decide whether a selection is an ideal subspace
    Ideal {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        elements: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        ops: Vec<usize>,
        #[arg(long, value_enum, default_value_t = IdealCriterion::T23)]
        criterion: IdealCriterion,
    },
    /// List the ideals of one ring
    Ideals {
        file: PathBuf,
        #[arg(long)]
        ring: usize,
    },
    /// Build the ideal-subspace chain under an operation order
    Chain {
        file: PathBuf,
        /// 1-based ring indices; defaults to 1,2,..
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Check the descending chain condition
    Artin { file: PathBuf },
    /// Decompose into non-reducible ideal subspaces
    Decompose { file: PathBuf },
    /// List idempotents of one ring and split its unit
    Idempotents {
        file: PathBuf,
        #[arg(long)]
        ring: usize,
    },
    /// Check whether every ring is a field
    Multifield { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SubspaceCriterion {
    /// per-ring subrings
    T21,
    /// per-ring additive subgroups closed under multiplication
    T22,
    /// ring axioms of the restriction
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealCriterion {
    /// per-ring ideals
    T23,
    /// subgroups absorbing products with the whole space
    Direct,
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf, limits: &Limits) -> Result<MultiRingSpace, Failure> {
    let doc = parse_spec(&read(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    build(&doc, limits)?.map_err(|(text, _)| Failure::Input(text.trim_end().replace('\n', "; ")))
}

fn ring_index(m: &MultiRingSpace, k: usize) -> Result<usize, Failure> {
    match k.checked_sub(1) {
        Some(i) if i < m.ring_count() => Ok(i),
        _ => Err(Error::RingIndexOutOfRange {
            index: k,
            count: m.ring_count(),
        }
        .into()),
    }
}

fn selection(
    m: &MultiRingSpace,
    elements: &[String],
    ops: &[usize],
) -> Result<SubsetSelection, Failure> {
    let ops = ops
        .iter()
        .map(|&k| ring_index(m, k))
        .collect::<Result<Vec<_>, _>>()?;
    let elements: Vec<&String> = elements.iter().filter(|e| !e.is_empty()).collect();
    Ok(m.selection(&elements, &ops)?)
}

fn ops_json(s: &SubsetSelection) -> Vec<usize> {
    s.ops.iter().map(|k| k + 1).collect()
}

fn ops_text(s: &SubsetSelection) -> String {
    ops_json(s)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn ring_title(k: usize, r: &FiniteRing) -> String {
    format!("ring {} ({})", k + 1, r.name())
}

/// Text and JSON for a space rejected by ring axioms or mixed laws.
fn rejection(universe: &Universe, e: &Error) -> Option<(String, Value)> {
    let label = |id| universe.label(id).to_string();
    match e {
        Error::RingInvalid {
            index,
            name,
            report,
        } => {
            let failures: Vec<Value> = report
                .failures()
                .iter()
                .map(|f| {
                    json!({
                        "axiom": f.axiom.name(),
                        "witness": f.witness.iter().map(|&id| label(id)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut text = format!(
                "invalid: ring {} ({name}) violates ring axioms\n",
                index + 1
            );
            for f in report.failures() {
                let w: Vec<String> = f.witness.iter().map(|&id| label(id)).collect();
                text.push_str(&format!("witness: {} at ({})\n", f.axiom, w.join(", ")));
            }
            let json = json!({"kind": "ring-axioms", "ring": index + 1, "name": name, "failures": failures});
            Some((text, json))
        }
        Error::MixedLaw(v) => {
            let text = format!(
                "invalid: {} fails for rings {} and {}\nwitness: x={} y={} z={}: {} != {}\n",
                v.law.name(),
                v.i + 1,
                v.j + 1,
                label(v.x),
                label(v.y),
                label(v.z),
                label(v.lhs),
                label(v.rhs)
            );
            let json = json!({
                "kind": "mixed-law",
                "law": v.law.name(),
                "rings": [v.i + 1, v.j + 1],
                "x": label(v.x),
                "y": label(v.y),
                "z": label(v.z),
                "lhs": label(v.lhs),
                "rhs": label(v.rhs),
            });
            Some((text, json))
        }
        _ => None,
    }
}

fn build(
    doc: &SpaceDocument,
    limits: &Limits,
) -> Result<Result<MultiRingSpace, (String, Value)>, Failure> {
    let universe = Universe::new(&doc.universe)?;
    match doc.build(limits) {
        Ok(m) => Ok(Ok(m)),
        Err(e) => rejection(&universe, &e).map(Err).ok_or_else(|| e.into()),
    }
}

fn validate(path: &PathBuf, limits: &Limits) -> Result<Report, Failure> {
    let doc = parse_spec(&read(path)?).map_err(|e| Failure::Input(e.to_string()))?;
    let m = match build(&doc, limits)? {
        Ok(m) => m,
        Err((text, failure)) => {
            return Ok(Report::new(
                false,
                text,
                json!({"valid": false, "failure": failure}),
            ));
        }
    };

    let count = m.ring_count();
    let mixed = if m.ring_count() == 1 {
        "vacuous (single ring)".to_string()
    } else if m.carriers_disjoint() {
        "vacuous (disjoint carriers)".to_string()
    } else if m.mixed_law_instances() == 0 {
        "vacuous (no fully defined instance)".to_string()
    } else {
        format!("hold ({} instances checked)", m.mixed_law_instances())
    };
    let mut text = format!(
        "{count} ring{}, mixed laws: {mixed}\n",
        if count == 1 { "" } else { "s" }
    );
    let mut rings = Vec::new();
    for (k, r) in m.rings().iter().enumerate() {
        let unit = r.unit().map(|u| m.label(u).to_string());
        text.push_str(&format!(
            "{}: {} elements, zero {}, unit {}, {}\n",
            ring_title(k, r),
            r.size(),
            m.label(r.zero()),
            unit.as_deref().unwrap_or("none"),
            if r.is_commutative() {
                "commutative"
            } else {
                "noncommutative"
            }
        ));
        rings.push(json!({
            "index": k + 1,
            "name": r.name(),
            "size": r.size(),
            "zero": m.label(r.zero()),
            "unit": unit,
            "commutative": r.is_commutative(),
        }));
    }
    let json = json!({
        "valid": true,
        "rings": rings,
        "carrier_size": m.carrier().len(),
        "disjoint": m.carriers_disjoint(),
        "mixed_law_instances": m.mixed_law_instances(),
    });
    Ok(Report::new(true, text, json))
}

fn verdict(
    m: &MultiRingSpace,
    s: &SubsetSelection,
    what: &str,
    key: &str,
    criterion: &str,
    holds: bool,
    defect: Option<Value>,
) -> Report {
    let witness = if holds {
        None
    } else {
        defect.map(|d| relabel(m, d))
    };
    let mut text = format!("{what}: {} ({criterion})\n", yes_no(holds));
    if let Some(w) = &witness {
        text.push_str(&format!("witness: {}\n", describe(w)));
    }
    let json = json!({
        "criterion": criterion,
        key: holds,
        "elements": labels(m, &s.elements),
        "ops": ops_json(s),
        "witness": witness,
    });
    Report::new(holds, text, json)
}

fn subspace(
    m: &MultiRingSpace,
    s: &SubsetSelection,
    criterion: SubspaceCriterion,
) -> Result<Report, Failure> {
    let (name, holds) = match criterion {
        SubspaceCriterion::T21 => ("t21", is_subspace_by_subrings(m, s)?),
        SubspaceCriterion::T22 => ("t22", is_subspace_by_subgroups(m, s)?),
        SubspaceCriterion::Direct => ("direct", is_subspace_direct(m, s)?),
    };
    let defect = subspace_defect(m, s)?.map(|d| serde_json::to_value(d).expect("serializable"));
    Ok(verdict(m, s, "subspace", "subspace", name, holds, defect))
}

fn ideal(
    m: &MultiRingSpace,
    s: &SubsetSelection,
    criterion: IdealCriterion,
) -> Result<Report, Failure> {
    let (name, holds) = match criterion {
        IdealCriterion::T23 => ("t23", is_ideal_subspace_by_ideals(m, s)?),
        IdealCriterion::Direct => ("direct", is_ideal_subspace_direct(m, s)?),
    };
    let defect =
        ideal_subspace_defect(m, s)?.map(|d| serde_json::to_value(d).expect("serializable"));
    Ok(verdict(
        m,
        s,
        "ideal subspace",
        "ideal_subspace",
        name,
        holds,
        defect,
    ))
}

fn ideals(m: &MultiRingSpace, k: usize, limits: &Limits) -> Result<Report, Failure> {
    let r = &m.rings()[k];
    let all = enumerate_ideals(r, limits)?;
    let maximal = maximal_ideals(r, limits)?;
    let mut text = format!("{}: {} ideals\n", ring_title(k, r), all.len());
    for i in &all {
        text.push_str(&format!("  {}\n", set_text(m, i)));
    }
    let maximal_text: Vec<String> = maximal.iter().map(|i| set_text(m, i)).collect();
    text.push_str(&format!("maximal: {}\n", maximal_text.join(" ")));
    let json = json!({
        "ring": k + 1,
        "name": r.name(),
        "ideals": all.iter().map(|i| labels(m, i)).collect::<Vec<_>>(),
        "maximal": maximal.iter().map(|i| labels(m, i)).collect::<Vec<_>>(),
    });
    Ok(Report::new(true, text, json))
}

fn chain(
    m: &MultiRingSpace,
    order: Option<Vec<usize>>,
    limits: &Limits,
) -> Result<Report, Failure> {
    let order = match order {
        None => OperationOrder::identity(m.ring_count()),
        Some(o) => {
            let zero_based = o
                .iter()
                .map(|&k| ring_index(m, k))
                .collect::<Result<Vec<_>, _>>()?;
            OperationOrder::new(zero_based, m.ring_count())?
        }
    };
    let c = ideal_subspace_chain(m, &order, limits)?;
    let valid = chain_is_valid(m, &c, limits)?;
    let stage_ring = |t: usize| {
        (t > 0).then(|| {
            let stage = c.stage_starts.iter().rposition(|&s| s <= t).unwrap_or(0);
            order.as_slice()[stage] + 1
        })
    };
    let order_text: Vec<String> = order
        .as_slice()
        .iter()
        .map(|k| (k + 1).to_string())
        .collect();
    let mut text = format!("order: {}\n", order_text.join(","));
    let mut terms = Vec::new();
    for (t, term) in c.terms.iter().enumerate() {
        let ring = stage_ring(t);
        let from = ring.map_or("start ".to_string(), |k| format!("ring {k}"));
        text.push_str(&format!(
            "{t:>2}  {from}  {}  ops {}\n",
            set_text(m, &term.elements),
            ops_text(term)
        ));
        terms.push(json!({
            "term": t,
            "ring": ring,
            "elements": labels(m, &term.elements),
            "ops": ops_json(term),
        }));
    }
    text.push_str(&format!("{} terms, valid: {}\n", c.len(), yes_no(valid)));
    Ok(Report::new(valid, text, Value::Array(terms)))
}

fn artin(m: &MultiRingSpace, limits: &Limits) -> Result<Report, Failure> {
    let report = is_artin(m, limits)?;
    let mut text = format!("artin: {}\n", yes_no(report.artin));
    for (k, (r, len)) in m.rings().iter().zip(&report.ring_chain_lengths).enumerate() {
        text.push_str(&format!(
            "{}: maximal ideal chain of {len} terms\n",
            ring_title(k, r)
        ));
    }
    text.push_str(&format!(
        "space chain (order 1..{}): {} terms\n",
        m.ring_count(),
        report.witness.len()
    ));
    let json = json!({
        "artin": report.artin,
        "ring_chain_lengths": report.ring_chain_lengths,
        "chain": report
            .witness
            .terms
            .iter()
            .map(|t| json!({"elements": labels(m, &t.elements), "ops": ops_json(t)}))
            .collect::<Vec<_>>(),
    });
    Ok(Report::new(report.artin, text, json))
}

fn decompose(m: &MultiRingSpace, limits: &Limits) -> Result<Report, Failure> {
    let d = match decompose_artin(m, limits) {
        Ok(d) => d,
        Err(Error::NoDecomposition(why)) => {
            let text = format!("decomposition: none\nwitness: {why}\n");
            return Ok(Report::new(
                false,
                text,
                json!({"decomposition": null, "witness": why}),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let route_name = |k: usize| serde_json::to_value(d.routes[k]).expect("serializable");
    let mut text = String::new();
    let mut routes = Vec::new();
    for (k, r) in m.rings().iter().enumerate() {
        let es = d.per_ring_idempotents.get(&k).map(|es| labels(m, es));
        let route = route_name(k);
        match &es {
            Some(es) => text.push_str(&format!(
                "{}: {} route, unit = {}\n",
                ring_title(k, r),
                describe(&route),
                es.join(" + ")
            )),
            None => text.push_str(&format!(
                "{}: {} route\n",
                ring_title(k, r),
                describe(&route)
            )),
        }
        routes.push(json!({"ring": k + 1, "name": r.name(), "route": route, "idempotents": es}));
    }
    let mut components = Vec::new();
    for (n, c) in d.components.iter().enumerate() {
        let idempotent = c.idempotent.map(|e| m.label(e).to_string());
        let nr = match c.non_reducible {
            Some(b) => yes_no(b),
            None => "unchecked (over budget)",
        };
        text.push_str(&format!(
            "component {}: ring {}, idempotent {}, {}, non-reducible: {nr}\n",
            n + 1,
            c.ring + 1,
            idempotent.as_deref().unwrap_or("none"),
            set_text(m, &c.selection.elements)
        ));
        components.push(json!({
            "ring": c.ring + 1,
            "idempotent": idempotent,
            "elements": labels(m, &c.selection.elements),
            "non_reducible": c.non_reducible,
        }));
    }
    let joins: Vec<Value> = d
        .joins
        .iter()
        .map(|j| serde_json::to_value(j).expect("serializable"))
        .collect();
    let join_text: Vec<String> = joins.iter().map(describe).collect();
    text.push_str(&format!(
        "joins: {}\n",
        if join_text.is_empty() {
            "none".into()
        } else {
            join_text.join(", ")
        }
    ));
    let json = json!({"routes": routes, "components": components, "joins": joins});
    Ok(Report::new(true, text, json))
}

fn idempotent_report(m: &MultiRingSpace, k: usize) -> Result<Report, Failure> {
    let r = &m.rings()[k];
    let es = idempotents(r);
    let mut text = format!("{}: {} idempotents\n", ring_title(k, r), es.len());
    let mut entries = Vec::new();
    for &e in &es {
        let primitive = e != r.zero() && is_primitive(r, e)?;
        text.push_str(&format!(
            "  {}{}\n",
            m.label(e),
            if primitive { "  primitive" } else { "" }
        ));
        entries.push(json!({"element": m.label(e), "primitive": primitive}));
    }
    let split = match decompose_unit(r) {
        Ok(parts) => Some(labels(m, &parts)),
        Err(Error::NoUnit(_)) => None,
        Err(e) => return Err(e.into()),
    };
    text.push_str(&format!(
        "unit decomposition: {}\n",
        split
            .as_ref()
            .map_or("none (no unit)".to_string(), |p| p.join(" + "))
    ));
    let json = json!({
        "ring": k + 1,
        "name": r.name(),
        "idempotents": entries,
        "unit_decomposition": split,
    });
    Ok(Report::new(true, text, json))
}

fn multifield(m: &MultiRingSpace) -> Report {
    let defect = multi_field_defect(m);
    let holds = defect.is_none();
    let mut text = format!("multi-field: {}\n", yes_no(holds));
    let witness = defect.map(|(k, d)| {
        let mut w = json!({"ring": k});
        if let (Value::Object(map), Value::Object(rest)) =
            (&mut w, serde_json::to_value(d).expect("serializable"))
        {
            map.extend(rest);
        }
        relabel(m, w)
    });
    if let Some(w) = &witness {
        text.push_str(&format!("witness: {}\n", describe(w)));
    }
    Report::new(
        holds,
        text,
        json!({"multi_field": holds, "witness": witness}),
    )
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let limits = Limits {
        max_ring_size: cli.max_ring_size,
        subset_budget: cli.subset_budget,
    };
    match &cli.command {
        Command::Validate { file } => validate(file, &limits),
        Command::Subspace {
            file,
            elements,
            ops,
            criterion,
        } => {
            let m = load(file, &limits)?;
            subspace(&m, &selection(&m, elements, ops)?, *criterion)
        }
        Command::Ideal {
            file,
            elements,
            ops,
            criterion,
        } => {
            let m = load(file, &limits)?;
            ideal(&m, &selection(&m, elements, ops)?, *criterion)
        }
        Command::Ideals { file, ring } => {
            let m = load(file, &limits)?;
            ideals(&m, ring_index(&m, *ring)?, &limits)
        }
        Command::Chain { file, order } => {
            let m = load(file, &limits)?;
            chain(&m, order.clone(), &limits)
        }
        Command::Artin { file } => artin(&load(file, &limits)?, &limits),
        Command::Decompose { file } => decompose(&load(file, &limits)?, &limits),
        Command::Idempotents { file, ring } => {
            let m = load(file, &limits)?;
            idempotent_report(&m, ring_index(&m, *ring)?)
        }
        Command::Multifield { file } => Ok(multifield(&load(file, &limits)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                )
            } else {
                report.text
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Input(msg) => (2, "invalid-input", msg),
                Failure::Budget(msg) => (3, "budget-exceeded", msg),
            };
            if cli.json {
                let err = json!({"error": {"kind": kind, "message": message}});
                let text = serde_json::to_string_pretty(&err).expect("serializable");
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
