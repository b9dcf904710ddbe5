use std::fmt;

use serde::Serialize;

use super::FiniteRing;
use crate::element::ElementId;

/// One ring axiom, in the order [`validate_ring`] checks them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// witness `(x, y, x + y)` with the sum outside the carrier
    AddClosure,
    /// witness `(x, y, x × y)` with the product outside the carrier
    MulClosure,
    /// witness `(zero, x)`
    AddIdentity,
    /// witness `(x)`
    AddInverse,
    /// witness `(x, y)`
    AddCommutativity,
    /// witness `(x, y, z)`
    AddAssociativity,
    /// witness `(x, y, z)`
    MulAssociativity,
    /// witness `(x, y, z)`: `x × (y + z) ≠ x × y + x × z`
    LeftDistributivity,
    /// witness `(x, y, z)`: `(x + y) × z ≠ x × z + y × z`
    RightDistributivity,
    /// witness `(unit, x)`
    UnitIdentity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddClosure => "add-closure",
            Axiom::MulClosure => "mul-closure",
            Axiom::AddIdentity => "add-identity",
            Axiom::AddInverse => "add-inverse",
            Axiom::AddCommutativity => "add-commutativity",
            Axiom::AddAssociativity => "add-associativity",
            Axiom::MulAssociativity => "mul-associativity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::UnitIdentity => "unit-identity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<ElementId>,
}

impl AxiomFailure {
    pub fn new(axiom: Axiom, witness: Vec<ElementId>) -> Self {
        Self { axiom, witness }
    }

    /// Re-evaluates the witness against the tables of `r`; true when the
    /// failure is reproduced.
    pub fn replays(&self, r: &FiniteRing) -> bool {
        let pos: Option<Vec<usize>> = self.witness.iter().map(|&id| r.position(id)).collect();
        let add = |x, y| r.add_pos(x, y);
        let mul = |x, y| r.mul_pos(x, y);
        match (self.axiom, pos.as_deref()) {
            (Axiom::AddClosure | Axiom::MulClosure, _) => {
                self.witness.len() == 3 && !r.contains(self.witness[2])
            }
            (Axiom::AddIdentity, Some(&[zero, x])) => add(zero, x) != x || add(x, zero) != x,
            (Axiom::AddInverse, Some(&[x])) => {
                let zero = r.zero_pos();
                !(0..r.size()).any(|y| add(x, y) == zero && add(y, x) == zero)
            }
            (Axiom::AddCommutativity, Some(&[x, y])) => add(x, y) != add(y, x),
            (Axiom::AddAssociativity, Some(&[x, y, z])) => add(add(x, y), z) != add(x, add(y, z)),
            (Axiom::MulAssociativity, Some(&[x, y, z])) => mul(mul(x, y), z) != mul(x, mul(y, z)),
            (Axiom::LeftDistributivity, Some(&[x, y, z])) => {
                mul(x, add(y, z)) != add(mul(x, y), mul(x, z))
            }
            (Axiom::RightDistributivity, Some(&[x, y, z])) => {
                mul(add(x, y), z) != add(mul(x, z), mul(y, z))
            }
            (Axiom::UnitIdentity, Some(&[unit, x])) => mul(unit, x) != x || mul(x, unit) != x,
            _ => false,
        }
    }
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of [`validate_ring`]: the first witness of every failing axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    ok: bool,
    failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn from_failures(failures: Vec<AxiomFailure>) -> Self {
        Self {
            ok: failures.is_empty(),
            failures,
        }
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    pub fn failures(&self) -> &[AxiomFailure] {
        &self.failures
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        for (i, failure) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Exhaustively checks the ring axioms of `r`.
///
/// Every axiom is scanned over all pairs or triples in canonical order and
type TripleCheck<'a> = dyn Fn(usize, usize, usize) -> bool + 'a;

/// the first counterexample, if any, is recorded.
pub fn validate_ring(r: &FiniteRing) -> ValidationReport {
    let n = r.size();
    let add = |x, y| r.add_pos(x, y);
    let mul = |x, y| r.mul_pos(x, y);
    let zero = r.zero_pos();
    let id = |p: usize| r.element(p);
    let mut failures = Vec::new();

    if let Some(x) = (0..n).find(|&x| add(zero, x) != x || add(x, zero) != x) {
        failures.push(AxiomFailure::new(Axiom::AddIdentity, vec![id(zero), id(x)]));
    }
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| add(x, y) == zero && add(y, x) == zero)) {
        failures.push(AxiomFailure::new(Axiom::AddInverse, vec![id(x)]));
    }
    if let Some((x, y)) = pairs(n).find(|&(x, y)| add(x, y) != add(y, x)) {
        failures.push(AxiomFailure::new(
            Axiom::AddCommutativity,
            vec![id(x), id(y)],
        ));
    }

    let triple_checks: [(Axiom, &TripleCheck); 4] = [
        (Axiom::AddAssociativity, &|x, y, z| {
            add(add(x, y), z) != add(x, add(y, z))
        }),
        (Axiom::MulAssociativity, &|x, y, z| {
            mul(mul(x, y), z) != mul(x, mul(y, z))
        }),
        (Axiom::LeftDistributivity, &|x, y, z| {
            mul(x, add(y, z)) != add(mul(x, y), mul(x, z))
        }),
        (Axiom::RightDistributivity, &|x, y, z| {
            mul(add(x, y), z) != add(mul(x, z), mul(y, z))
        }),
    ];
    for (axiom, fails) in triple_checks {
        if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| fails(x, y, z)) {
            failures.push(AxiomFailure::new(axiom, vec![id(x), id(y), id(z)]));
        }
    }

    if let Some(u) = r.unit_pos() {
        if let Some(x) = (0..n).find(|&x| mul(u, x) != x || mul(x, u) != x) {
            failures.push(AxiomFailure::new(Axiom::UnitIdentity, vec![id(u), id(x)]));
        }
    }
    ValidationReport::from_failures(failures)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}
