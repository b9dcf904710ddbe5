//! Multi-ring spaces: unions of finite rings over one universe.
//!
//! Operations are partial: `x +_i y` is defined exactly when both operands
//! lie in the carrier of ring `i`. A label shared by two rings is one
//! element, and the only constraint tying rings together is the family of
//! mixed associative and distributive laws checked by [`build_multispace`],
//! quantified over those `(x, y, z)` for which both sides are defined.
//!
//! Subspaces and ideal subspaces are decided two ways: per ring (subrings,
//! subgroups plus closure, ideals) and directly from the definitions. The two
//! routes share nothing below the selection bookkeeping.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::element::{ElementId, ElementSet, Universe};
use crate::error::Error;
use crate::ring::{
    self, detect_identity, field_defect, validate_ring, FieldDefect, FiniteRing, IdealDefect, Mask,
    SubringDefect,
};
use crate::Limits;

/// A validated multi-ring space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiRingSpace {
    universe: Universe,
    rings: Vec<FiniteRing>,
    carrier: ElementSet,
    mixed_law_instances: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MixedLaw {
    /// `(x +_i y) +_j z = x +_i (y +_j z)`
    AddAssociativity,
    /// `(x ×_i y) ×_j z = x ×_i (y ×_j z)`
    MulAssociativity,
    /// `x ×_i (y +_j z) = x ×_i y +_j x ×_i z`
    LeftDistributivity,
    /// `(y +_j z) ×_i x = y ×_i x +_j z ×_i x`
    RightDistributivity,
}

impl MixedLaw {
    pub const ALL: [MixedLaw; 4] = [
        MixedLaw::AddAssociativity,
        MixedLaw::MulAssociativity,
        MixedLaw::LeftDistributivity,
        MixedLaw::RightDistributivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MixedLaw::AddAssociativity => "mixed-add-associativity",
            MixedLaw::MulAssociativity => "mixed-mul-associativity",
            MixedLaw::LeftDistributivity => "mixed-left-distributivity",
            MixedLaw::RightDistributivity => "mixed-right-distributivity",
        }
    }

    /// Both sides of the law for rings `(i, j)`, when every intermediate
    /// result exists.
    pub fn sides(
        self,
        ri: &FiniteRing,
        rj: &FiniteRing,
        x: ElementId,
        y: ElementId,
        z: ElementId,
    ) -> Option<(ElementId, ElementId)> {
        match self {
            MixedLaw::AddAssociativity => {
                let lhs = rj.add(ri.add(x, y)?, z)?;
                let rhs = ri.add(x, rj.add(y, z)?)?;
                Some((lhs, rhs))
            }
            MixedLaw::MulAssociativity => {
                let lhs = rj.mul(ri.mul(x, y)?, z)?;
                let rhs = ri.mul(x, rj.mul(y, z)?)?;
                Some((lhs, rhs))
            }
            MixedLaw::LeftDistributivity => {
                let lhs = ri.mul(x, rj.add(y, z)?)?;
                let rhs = rj.add(ri.mul(x, y)?, ri.mul(x, z)?)?;
                Some((lhs, rhs))
            }
            MixedLaw::RightDistributivity => {
                let lhs = ri.mul(rj.add(y, z)?, x)?;
                let rhs = rj.add(ri.mul(y, x)?, ri.mul(z, x)?)?;
                Some((lhs, rhs))
            }
        }
    }
}

impl fmt::Display for MixedLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A counterexample to a mixed law between rings `i` and `j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedLawViolation {
    pub law: MixedLaw,
    pub i: usize,
    pub j: usize,
    pub x: ElementId,
    pub y: ElementId,
    pub z: ElementId,
    pub lhs: ElementId,
    pub rhs: ElementId,
}

impl MixedLawViolation {
    /// Re-evaluates both sides against the ring tables.
    pub fn replays(&self, rings: &[FiniteRing]) -> bool {
        let (Some(ri), Some(rj)) = (rings.get(self.i), rings.get(self.j)) else {
            return false;
        };
        matches!(self.law.sides(ri, rj, self.x, self.y, self.z), Some((l, r)) if l != r)
    }
}

impl fmt::Display for MixedLawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails for rings ({}, {}) at ({}, {}, {}): {} != {}",
            self.law,
            self.i + 1,
            self.j + 1,
            self.x,
            self.y,
            self.z,
            self.lhs,
            self.rhs
        )
    }
}

/// Scans every mixed law over all ordered ring pairs `i ≠ j`.
///
/// Returns the number of fully defined instances checked and the first
/// violation in canonical order (pair, then law, then `(x, y, z)`).
pub fn scan_mixed_laws(rings: &[FiniteRing]) -> (usize, Option<MixedLawViolation>) {
    let mut checked = 0;
    for (i, ri) in rings.iter().enumerate() {
        for (j, rj) in rings.iter().enumerate() {
            if i == j {
                continue;
            }
            // Every law needs y (and z, for the distributive laws) in both
            // rings; associativity needs z only in ring j.
            let shared: Vec<ElementId> = ri
                .elements()
                .iter()
                .copied()
                .filter(|&e| rj.contains(e))
                .collect();
            if shared.is_empty() {
                continue;
            }
            for law in MixedLaw::ALL {
                let zs: &[ElementId] = match law {
                    MixedLaw::AddAssociativity | MixedLaw::MulAssociativity => rj.elements(),
                    _ => &shared,
                };
                for &x in ri.elements() {
                    for &y in &shared {
                        for &z in zs {
                            if let Some((lhs, rhs)) = law.sides(ri, rj, x, y, z) {
                                checked += 1;
                                if lhs != rhs {
                                    let v = MixedLawViolation {
                                        law,
                                        i,
                                        j,
                                        x,
                                        y,
                                        z,
                                        lhs,
                                        rhs,
                                    };
                                    return (checked, Some(v));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (checked, None)
}

/// Validates a family of rings as a multi-ring space.
///
/// Every ring must lie in `universe`, respect `limits.max_ring_size` and pass
/// [`validate_ring`]; then the mixed laws are checked exhaustively.
pub fn build_multispace(
    universe: Universe,
    rings: Vec<FiniteRing>,
    limits: &Limits,
) -> Result<MultiRingSpace, Error> {
    if rings.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut carrier = ElementSet::new();
    for (index, r) in rings.iter().enumerate() {
        if let Some(&foreign) = r.elements().iter().find(|&&e| !universe.contains(e)) {
            return Err(Error::ForeignElement(foreign));
        }
        limits.check_ring_size("ring", r.size())?;
        let report = validate_ring(r);
        if !report.ok() {
            return Err(Error::RingInvalid {
                index,
                name: r.name().to_string(),
                report,
            });
        }
        carrier.extend(r.elements().iter().copied());
    }
    let (mixed_law_instances, violation) = scan_mixed_laws(&rings);
    if let Some(v) = violation {
        return Err(Error::MixedLaw(v));
    }
    Ok(MultiRingSpace {
        universe,
        rings,
        carrier,
        mixed_law_instances,
    })
}

impl MultiRingSpace {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rings(&self) -> &[FiniteRing] {
        &self.rings
    }

    pub fn ring(&self, index: usize) -> Result<&FiniteRing, Error> {
        self.rings.get(index).ok_or(Error::RingIndexOutOfRange {
            index,
            count: self.rings.len(),
        })
    }

    pub fn ring_count(&self) -> usize {
        self.rings.len()
    }

    pub fn carrier(&self) -> &ElementSet {
        &self.carrier
    }

    /// Number of fully defined mixed-law instances checked at construction;
    /// zero means the laws held vacuously.
    pub fn mixed_law_instances(&self) -> usize {
        self.mixed_law_instances
    }

    pub fn carriers_disjoint(&self) -> bool {
        self.carrier.len() == self.rings.iter().map(FiniteRing::size).sum::<usize>()
    }

    /// The whole carrier with every operation pair.
    pub fn full_selection(&self) -> SubsetSelection {
        SubsetSelection {
            elements: self.carrier.clone(),
            ops: (0..self.rings.len()).collect(),
        }
    }

    /// Elements that are the additive zero of every ring containing them.
    pub fn zero_set(&self) -> ElementSet {
        self.carrier
            .iter()
            .copied()
            .filter(|&e| self.rings.iter().all(|r| !r.contains(e) || r.zero() == e))
            .collect()
    }

    /// The per-ring zeros with all operation pairs.
    pub fn zeros_selection(&self) -> SubsetSelection {
        SubsetSelection {
            elements: self.rings.iter().map(FiniteRing::zero).collect(),
            ops: (0..self.rings.len()).collect(),
        }
    }

    pub fn label(&self, id: ElementId) -> &str {
        self.universe.label(id)
    }

    pub fn labels_of<'a, I>(&self, ids: I) -> Vec<String>
    where
        I: IntoIterator<Item = &'a ElementId>,
    {
        ids.into_iter()
            .map(|&id| self.label(id).to_string())
            .collect()
    }

    /// Builds a selection from labels and 0-based ring indices, checking that
    /// it is well formed.
    pub fn selection<S: AsRef<str>>(
        &self,
        labels: &[S],
        ops: &[usize],
    ) -> Result<SubsetSelection, Error> {
        let s = SubsetSelection {
            elements: self.universe.ids(labels)?.into_iter().collect(),
            ops: ops.iter().copied().collect(),
        };
        self.check(&s)?;
        Ok(s)
    }

    pub(crate) fn check(&self, s: &SubsetSelection) -> Result<(), Error> {
        if s.ops.is_empty() {
            return Err(Error::EmptyOps);
        }
        if let Some(&k) = s.ops.iter().find(|&&k| k >= self.rings.len()) {
            return Err(Error::RingIndexOutOfRange {
                index: k,
                count: self.rings.len(),
            });
        }
        if let Some(&x) = s.elements.iter().find(|x| !self.carrier.contains(x)) {
            return Err(Error::ForeignElement(x));
        }
        Ok(())
    }

    /// `s.elements ∩ R_k` as a mask over ring `k`.
    pub(crate) fn component(&self, k: usize, elements: &ElementSet) -> Mask {
        self.rings[k].mask_of_intersection(elements)
    }

    fn selected_rings<'a>(
        &'a self,
        s: &'a SubsetSelection,
    ) -> impl Iterator<Item = (usize, &'a FiniteRing)> {
        s.ops.iter().map(move |&k| (k, &self.rings[k]))
    }
}

/// A candidate sub-multi-space: elements plus the operation pairs (0-based
/// ring indices) it keeps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubsetSelection {
    pub elements: ElementSet,
    pub ops: BTreeSet<usize>,
}

impl SubsetSelection {
    pub fn new(
        elements: impl IntoIterator<Item = ElementId>,
        ops: impl IntoIterator<Item = usize>,
    ) -> Self {
        Self {
            elements: elements.into_iter().collect(),
            ops: ops.into_iter().collect(),
        }
    }
}

/// Why a selection is not a (ideal) subspace. Ring indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SelectionDefect {
    /// no selected ring meets the selection
    Empty,
    /// element outside every selected ring
    Uncovered {
        x: ElementId,
    },
    /// element outside the enclosing selection
    OutsideAmbient {
        x: ElementId,
    },
    /// operation pair not kept by the enclosing selection
    OpOutsideAmbient {
        ring: usize,
    },
    NotSubring {
        ring: usize,
        defect: SubringDefect,
    },
    NotIdeal {
        ring: usize,
        defect: IdealDefect,
    },
}

fn side_conditions(m: &MultiRingSpace, s: &SubsetSelection) -> Option<SelectionDefect> {
    if let Some(&x) = s
        .elements
        .iter()
        .find(|&&x| !m.selected_rings(s).any(|(_, r)| r.contains(x)))
    {
        return Some(SelectionDefect::Uncovered { x });
    }
    if s.elements.is_empty() {
        return Some(SelectionDefect::Empty);
    }
    None
}

/// First reason `s` fails the per-ring subring criterion, if any.
pub fn subspace_defect(
    m: &MultiRingSpace,
    s: &SubsetSelection,
) -> Result<Option<SelectionDefect>, Error> {
    m.check(s)?;
    if let Some(d) = side_conditions(m, s) {
        return Ok(Some(d));
    }
    for (k, r) in m.selected_rings(s) {
        let part = m.component(k, &s.elements);
        if part == 0 {
            continue;
        }
        if let Some(defect) = ring::subring_defect(r, part) {
            return Ok(Some(SelectionDefect::NotSubring { ring: k, defect }));
        }
    }
    Ok(None)
}

/// Subspace test through subrings: each selected ring meets `s` in a subring
/// or not at all, and `s` is covered by the selected rings.
pub fn is_subspace_by_subrings(m: &MultiRingSpace, s: &SubsetSelection) -> Result<bool, Error> {
    Ok(subspace_defect(m, s)?.is_none())
}

/// Subspace test through additive subgroups plus multiplicative closure.
///
/// Each selected `(s ∩ R_j; +_j)` must contain the zero of `R_j` and be closed
/// under `+_j` and additive inverses, and `s ∩ R_j` must be closed under `×_j`.
pub fn is_subspace_by_subgroups(m: &MultiRingSpace, s: &SubsetSelection) -> Result<bool, Error> {
    m.check(s)?;
    if side_conditions(m, s).is_some() {
        return Ok(false);
    }
    for (_, r) in m.selected_rings(s) {
        let part: Vec<ElementId> = s
            .elements
            .iter()
            .copied()
            .filter(|&x| r.contains(x))
            .collect();
        if part.is_empty() {
            continue;
        }
        let within = |v: Option<ElementId>| v.is_some_and(|v| s.elements.contains(&v));
        let subgroup = s.elements.contains(&r.zero())
            && part.iter().all(|&x| within(r.neg(x)))
            && part
                .iter()
                .all(|&x| part.iter().all(|&y| within(r.add(x, y))));
        let closed = part
            .iter()
            .all(|&x| part.iter().all(|&y| within(r.mul(x, y))));
        if !(subgroup && closed) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restricts ring `r` to `part` and checks the ring axioms on the result.
fn restriction_is_ring(r: &FiniteRing, part: &[ElementId]) -> bool {
    let n = part.len();
    let pos = |v: ElementId| part.iter().position(|&p| p == v);
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for (a, &x) in part.iter().enumerate() {
        for (b, &y) in part.iter().enumerate() {
            match (r.add(x, y).and_then(pos), r.mul(x, y).and_then(pos)) {
                (Some(s), Some(p)) => {
                    add[a][b] = s;
                    mul[a][b] = p;
                }
                _ => return false,
            }
        }
    }
    let Some(zero) = detect_identity(&add) else {
        return false;
    };
    FiniteRing::from_raw_parts("restriction", part.to_vec(), &add, &mul, zero, None)
        .map(|sub| validate_ring(&sub).ok())
        .unwrap_or(false)
}

/// Subspace test straight from the definition: every selected operation pair,
/// restricted to `s`, is total on its part and makes it a ring (checked by
/// the full axiom scan), or the part is empty.
pub fn is_subspace_direct(m: &MultiRingSpace, s: &SubsetSelection) -> Result<bool, Error> {
    m.check(s)?;
    if side_conditions(m, s).is_some() {
        return Ok(false);
    }
    for (_, r) in m.selected_rings(s) {
        let part: Vec<ElementId> = s
            .elements
            .iter()
            .copied()
            .filter(|&x| r.contains(x))
            .collect();
        if !part.is_empty() && !restriction_is_ring(r, &part) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ambient_conditions(ambient: &SubsetSelection, i: &SubsetSelection) -> Option<SelectionDefect> {
    if let Some(&ring) = i.ops.iter().find(|k| !ambient.ops.contains(k)) {
        return Some(SelectionDefect::OpOutsideAmbient { ring });
    }
    if let Some(&x) = i.elements.iter().find(|x| !ambient.elements.contains(x)) {
        return Some(SelectionDefect::OutsideAmbient { x });
    }
    None
}

/// First reason `i` fails the per-ring ideal criterion inside `ambient`.
pub fn ideal_subspace_defect_within(
    m: &MultiRingSpace,
    ambient: &SubsetSelection,
    i: &SubsetSelection,
) -> Result<Option<SelectionDefect>, Error> {
    m.check(ambient)?;
    m.check(i)?;
    if let Some(d) = ambient_conditions(ambient, i).or_else(|| side_conditions(m, i)) {
        return Ok(Some(d));
    }
    for (k, r) in m.selected_rings(i) {
        let part = m.component(k, &i.elements);
        if part == 0 {
            continue;
        }
        let around = m.component(k, &ambient.elements);
        if let Some(defect) = ring::ideal_defect_in(r, around, part) {
            return Ok(Some(SelectionDefect::NotIdeal { ring: k, defect }));
        }
    }
    Ok(None)
}

pub fn ideal_subspace_defect(
    m: &MultiRingSpace,
    i: &SubsetSelection,
) -> Result<Option<SelectionDefect>, Error> {
    ideal_subspace_defect_within(m, &m.full_selection(), i)
}

/// Ideal-subspace test through ideals: each selected ring meets `i` in an
/// ideal of that ring or not at all.
pub fn is_ideal_subspace_by_ideals(m: &MultiRingSpace, i: &SubsetSelection) -> Result<bool, Error> {
    Ok(ideal_subspace_defect(m, i)?.is_none())
}

/// As [`is_ideal_subspace_by_ideals`], relative to the subspace `ambient`:
/// each part must be an ideal of the corresponding part of `ambient`.
pub fn is_ideal_subspace_by_ideals_within(
    m: &MultiRingSpace,
    ambient: &SubsetSelection,
    i: &SubsetSelection,
) -> Result<bool, Error> {
    Ok(ideal_subspace_defect_within(m, ambient, i)?.is_none())
}

/// Ideal-subspace test from the definition, relative to `ambient`:
/// (a) each selected `(i ∩ R_k; +_k)` is a subgroup or empty, and
/// (b) `r ×_k a` and `a ×_k r` lie in `i` for every `r` of `ambient` and `a`
/// of `i` for which the product exists.
pub fn is_ideal_subspace_direct_within(
    m: &MultiRingSpace,
    ambient: &SubsetSelection,
    i: &SubsetSelection,
) -> Result<bool, Error> {
    m.check(ambient)?;
    m.check(i)?;
    if ambient_conditions(ambient, i).is_some() || side_conditions(m, i).is_some() {
        return Ok(false);
    }
    let inside = |v: Option<ElementId>| v.is_none_or(|v| i.elements.contains(&v));
    for (_, r) in m.selected_rings(i) {
        let part: Vec<ElementId> = i
            .elements
            .iter()
            .copied()
            .filter(|&x| r.contains(x))
            .collect();
        if part.is_empty() {
            continue;
        }
        let subgroup = i.elements.contains(&r.zero())
            && part.iter().all(|&x| inside(r.neg(x)))
            && part
                .iter()
                .all(|&x| part.iter().all(|&y| inside(r.add(x, y))));
        if !subgroup {
            return Ok(false);
        }
    }
    for &s in &ambient.elements {
        for &a in &i.elements {
            for (_, r) in m.selected_rings(i) {
                if !inside(r.mul(s, a)) || !inside(r.mul(a, s)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_ideal_subspace_direct(m: &MultiRingSpace, i: &SubsetSelection) -> Result<bool, Error> {
    is_ideal_subspace_direct_within(m, &m.full_selection(), i)
}

/// First ring (0-based) that is not a field, with the reason.
pub fn multi_field_defect(m: &MultiRingSpace) -> Option<(usize, FieldDefect)> {
    m.rings
        .iter()
        .enumerate()
        .find_map(|(k, r)| field_defect(r).map(|d| (k, d)))
}

/// Every ring of the space is a field.
pub fn is_multi_field(m: &MultiRingSpace) -> bool {
    multi_field_defect(m).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4z6() -> MultiRingSpace {
        let labels = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5"];
        let u = Universe::new(&labels).unwrap();
        let a = FiniteRing::cyclic_on("Z4", &u.ids(&labels[..4]).unwrap()).unwrap();
        let b = FiniteRing::cyclic_on("Z6", &u.ids(&labels[4..]).unwrap()).unwrap();
        build_multispace(u, vec![a, b], &Limits::default()).unwrap()
    }

    fn sel(m: &MultiRingSpace, labels: &[&str], ops: &[usize]) -> SubsetSelection {
        m.selection(labels, ops).unwrap()
    }

    #[test]
    fn disjoint_union_is_vacuously_valid() {
        let m = z4z6();
        assert_eq!(m.mixed_law_instances(), 0);
        assert!(m.carriers_disjoint());
        assert_eq!(m.carrier().len(), 10);
    }

    #[test]
    fn duplicated_z2_is_valid_and_checks_instances() {
        let u = Universe::new(&["0", "1"]).unwrap();
        let ids = u.ids(&["0", "1"]).unwrap();
        let r = FiniteRing::cyclic_on("Z2", &ids).unwrap();
        let m =
            build_multispace(u, vec![r.clone(), r.with_name("Z2'")], &Limits::default()).unwrap();
        assert!(m.mixed_law_instances() > 0);
    }

    #[test]
    fn empty_family_is_rejected() {
        assert!(matches!(
            build_multispace(Universe::numbered(1), vec![], &Limits::default()),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn subspace_examples() {
        let m = z4z6();
        let s = sel(&m, &["a0", "a2", "b0", "b3"], &[0, 1]);
        assert!(is_subspace_direct(&m, &s).unwrap());
        assert!(is_subspace_by_subrings(&m, &s).unwrap());
        assert!(is_subspace_by_subgroups(&m, &s).unwrap());

        let s = sel(&m, &["a0", "a1"], &[0]);
        assert!(!is_subspace_direct(&m, &s).unwrap());

        let s = sel(&m, &[], &[0]);
        assert!(!is_subspace_direct(&m, &s).unwrap());
        assert!(!is_subspace_by_subrings(&m, &s).unwrap());

        let s = sel(&m, &["a0", "a2", "b0", "b1"], &[0, 1]);
        assert!(!is_subspace_by_subrings(&m, &s).unwrap());
        let s = sel(&m, &["b0", "b2", "b4"], &[1]);
        assert!(is_subspace_by_subrings(&m, &s).unwrap());

        assert!(is_subspace_by_subgroups(&m, &sel(&m, &["a0"], &[0])).unwrap());
        assert!(!is_subspace_by_subgroups(&m, &sel(&m, &["a1"], &[0])).unwrap());
    }

    #[test]
    fn elements_outside_selected_rings_are_uncovered() {
        let m = z4z6();
        let s = sel(&m, &["a0", "b0"], &[0]);
        assert!(!is_subspace_direct(&m, &s).unwrap());
        assert_eq!(
            subspace_defect(&m, &s).unwrap(),
            Some(SelectionDefect::Uncovered {
                x: m.universe().id("b0").unwrap()
            })
        );
    }

    #[test]
    fn malformed_selections_are_errors() {
        let m = z4z6();
        let empty_ops = SubsetSelection::new([ElementId(0)], []);
        assert!(matches!(
            is_subspace_direct(&m, &empty_ops),
            Err(Error::EmptyOps)
        ));
        let bad_ring = SubsetSelection::new([ElementId(0)], [5]);
        assert!(matches!(
            is_subspace_by_subrings(&m, &bad_ring),
            Err(Error::RingIndexOutOfRange { index: 5, count: 2 })
        ));
    }

    #[test]
    fn ideal_subspace_examples() {
        let m = z4z6();
        for (labels, ops, expected) in [
            (&["a0", "a2", "b0"][..], &[0, 1][..], true),
            (&["a0", "a2", "b0", "b3"][..], &[0, 1][..], true),
            (&["a0", "a1", "a2", "a3"][..], &[0, 1][..], true),
            (&["b0", "b2", "b4"][..], &[1][..], true),
            (&["b0", "b1"][..], &[1][..], false),
        ] {
            let i = sel(&m, labels, ops);
            assert_eq!(
                is_ideal_subspace_direct(&m, &i).unwrap(),
                expected,
                "{labels:?}"
            );
            assert_eq!(
                is_ideal_subspace_by_ideals(&m, &i).unwrap(),
                expected,
                "{labels:?}"
            );
        }
    }

    #[test]
    fn relative_ideals_use_the_enclosing_part() {
        // {0,4,8} is an ideal of the ring {0,2,..,10} but {0,6} is too; {0,3,6,9} is outside.
        let labels: Vec<String> = (0..12).map(|i| i.to_string()).collect();
        let u = Universe::new(&labels).unwrap();
        let r = FiniteRing::cyclic_on("Z12", &u.ids(&labels).unwrap()).unwrap();
        let m = build_multispace(u, vec![r], &Limits::default()).unwrap();
        let even = sel(&m, &["0", "2", "4", "6", "8", "10"], &[0]);
        let six = sel(&m, &["0", "6"], &[0]);
        assert!(is_ideal_subspace_by_ideals_within(&m, &even, &six).unwrap());
        assert!(is_ideal_subspace_direct_within(&m, &even, &six).unwrap());
        let threes = sel(&m, &["0", "3", "6", "9"], &[0]);
        assert!(!is_ideal_subspace_by_ideals_within(&m, &even, &threes).unwrap());
        assert!(!is_ideal_subspace_direct_within(&m, &even, &threes).unwrap());
    }

    #[test]
    fn multi_field_examples() {
        let space = |ns: &[usize]| {
            let total: usize = ns.iter().sum();
            let u = Universe::numbered(total);
            let mut next = 0;
            let rings = ns
                .iter()
                .map(|&n| {
                    let ids: Vec<ElementId> = (next..next + n).map(ElementId).collect();
                    next += n;
                    FiniteRing::cyclic_on(format!("Z{n}"), &ids).unwrap()
                })
                .collect();
            build_multispace(u, rings, &Limits::default()).unwrap()
        };
        assert!(is_multi_field(&space(&[2, 3])));
        assert!(!is_multi_field(&space(&[4, 3])));
        assert_eq!(
            multi_field_defect(&space(&[4, 3])),
            Some((0, FieldDefect::NotInvertible { x: ElementId(2) }))
        );
        assert!(is_multi_field(&space(&[5])));
    }
}
