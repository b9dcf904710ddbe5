//! Directed sums of ideal subspaces and decompositions into non-reducible
//! pieces.
//!
//! Two ways of combining ideal subspaces are supported. Across rings,
//! components are joined by set union and may only share elements that are
//! additive zeros of every ring containing them. Inside one ring, components
//! are joined by elementwise addition and must meet exactly in that ring's
//! zero (the classical internal direct sum); under union alone a ring such as
//! `Z_6` is not the combination of `{0,3}` and `{0,2,4}`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::element::{ElementId, ElementSet};
use crate::error::Error;
use crate::multispace::{
    is_ideal_subspace_by_ideals, is_ideal_subspace_by_ideals_within, is_subspace_by_subrings,
    MultiRingSpace, SubsetSelection,
};
use crate::ring::{additive_span, decompose_unit, ideals_in, mask, FiniteRing, Mask};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumMode {
    /// `I = I_1 ∪ I_2`, meeting only in common zeros
    Union,
    /// `I = I_1 + I_2` inside one ring, meeting only in its zero
    Additive,
}

/// How the components of one ring were found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// spans of `R e ∪ e R` for primitive orthogonal idempotents `e`
    Idempotent,
    /// exhaustive splitting into ideals, for rings without a unit
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// 0-based ring index
    pub ring: usize,
    pub selection: SubsetSelection,
    /// the idempotent generating the component (idempotent route only)
    pub idempotent: Option<ElementId>,
    /// `None` when the non-reducibility scan did not fit in the budget
    pub non_reducible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedSumDecomposition {
    /// Ordered by ring, then by idempotent (or element list for the search route).
    pub components: Vec<Component>,
    pub per_ring_idempotents: BTreeMap<usize, Vec<ElementId>>,
    /// `routes[k]` for ring `k`
    pub routes: Vec<Route>,
    /// `joins[t]` combines components `t` and `t + 1`.
    pub joins: Vec<SumMode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompositionDefect {
    #[error("ring {ring}: {e} is not idempotent")]
    NotIdempotent { ring: usize, e: ElementId },
    #[error("ring {ring}: {e} and {f} are not orthogonal")]
    NotOrthogonal {
        ring: usize,
        e: ElementId,
        f: ElementId,
    },
    #[error("ring {ring}: idempotents do not sum to the unit")]
    UnitSum { ring: usize },
    #[error("component {0} is not an ideal subspace")]
    NotIdeal(usize),
    #[error("components {0} and {1} overlap beyond the allowed zeros")]
    Overlap(usize, usize),
    #[error("ring {ring}: components do not add up to the ring")]
    Incomplete { ring: usize },
    #[error("ring {ring}: component sum is not direct")]
    Dependent { ring: usize },
    #[error("components do not reconstruct the carrier")]
    CarrierMismatch,
    #[error("component {0} is reducible")]
    Reducible(usize),
    #[error("join annotations do not match the components")]
    Joins,
}

fn sum_set(r: &FiniteRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    a.iter()
        .flat_map(|&x| b.iter().filter_map(move |&y| r.add(x, y)))
        .collect()
}

/// First selected ring of `whole` containing every element of the three sets.
fn common_ring(
    m: &MultiRingSpace,
    whole: &SubsetSelection,
    parts: [&ElementSet; 2],
) -> Option<usize> {
    whole.ops.iter().copied().find(|&k| {
        let r = &m.rings()[k];
        whole
            .elements
            .iter()
            .chain(parts[0])
            .chain(parts[1])
            .all(|&x| r.contains(x))
    })
}

fn sum_holds(
    m: &MultiRingSpace,
    whole: &ElementSet,
    a: &ElementSet,
    b: &ElementSet,
    mode: SumMode,
    ring: Option<usize>,
    zeros: &ElementSet,
) -> bool {
    let meet: ElementSet = a.intersection(b).copied().collect();
    match (mode, ring) {
        (SumMode::Union, _) => {
            a.union(b).copied().collect::<ElementSet>() == *whole && meet.is_subset(zeros)
        }
        (SumMode::Additive, Some(k)) => {
            let r = &m.rings()[k];
            meet.len() == 1 && meet.contains(&r.zero()) && sum_set(r, a, b) == *whole
        }
        (SumMode::Additive, None) => false,
    }
}

/// Decides whether `whole` is the directed sum of `i1` and `i2` under `mode`.
///
/// Both parts must be ideal subspaces of `whole`. In additive mode every
/// element involved must lie in one ring selected by `whole`.
pub fn directed_sum_check(
    m: &MultiRingSpace,
    whole: &SubsetSelection,
    i1: &SubsetSelection,
    i2: &SubsetSelection,
    mode: SumMode,
) -> Result<bool, Error> {
    if !is_subspace_by_subrings(m, whole)? {
        return Err(Error::NotIdealSubspace(whole.clone()));
    }
    for part in [i1, i2] {
        if !is_ideal_subspace_by_ideals_within(m, whole, part)? {
            return Err(Error::NotIdealSubspace(part.clone()));
        }
    }
    let ring = match mode {
        SumMode::Union => None,
        SumMode::Additive => Some(
            common_ring(m, whole, [&i1.elements, &i2.elements]).ok_or(Error::MixedModeMismatch)?,
        ),
    };
    Ok(sum_holds(
        m,
        &whole.elements,
        &i1.elements,
        &i2.elements,
        mode,
        ring,
        &m.zero_set(),
    ))
}

/// All element sets of ideal subspaces inside `i`, by exhaustive scan.
fn ideal_subspaces_of(
    m: &MultiRingSpace,
    i: &SubsetSelection,
    limits: &Limits,
) -> Result<Vec<ElementSet>, Error> {
    let elements: Vec<ElementId> = i.elements.iter().copied().collect();
    let ops: Vec<usize> = i.ops.iter().copied().collect();
    let op_subsets = (1u64 << ops.len()) - 1;
    limits.check_subsets("ideal subspace scan", elements.len(), op_subsets)?;
    let mut found = Vec::new();
    for pick in mask::submasks(mask::full(elements.len())) {
        let candidate_elements: ElementSet = mask::bits(pick).map(|b| elements[b]).collect();
        for op_pick in 1..=op_subsets {
            let candidate = SubsetSelection {
                elements: candidate_elements.clone(),
                ops: mask::bits(op_pick).map(|b| ops[b]).collect(),
            };
            if is_ideal_subspace_by_ideals_within(m, i, &candidate)? {
                found.push(candidate_elements);
                break;
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

/// True when every directed-sum splitting of `i` into ideal subspaces is
/// trivial, decided by enumerating all ideal subspaces of `i`.
///
/// Union splittings are always considered; additive splittings too when `i`
/// lies inside one of its selected rings.
pub fn is_non_reducible(
    m: &MultiRingSpace,
    i: &SubsetSelection,
    limits: &Limits,
) -> Result<bool, Error> {
    if !is_ideal_subspace_by_ideals(m, i)? {
        return Err(Error::NotIdealSubspace(i.clone()));
    }
    let subs = ideal_subspaces_of(m, i, limits)?;
    let zeros = m.zero_set();
    let ring = common_ring(m, i, [&i.elements, &i.elements]);
    let proper: Vec<&ElementSet> = subs.iter().filter(|s| **s != i.elements).collect();
    for (n, a) in proper.iter().enumerate() {
        for b in &proper[n..] {
            let union = sum_holds(m, &i.elements, a, b, SumMode::Union, None, &zeros);
            let additive =
                ring.is_some() && sum_holds(m, &i.elements, a, b, SumMode::Additive, ring, &zeros);
            if union || additive {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Splits the ring `whole` (a subring of `r`) into ideals that admit no
/// nontrivial additive splitting. Pieces come back in lexicographic order.
fn split_search(r: &FiniteRing, whole: Mask, limits: &Limits) -> Result<Vec<Mask>, Error> {
    let zero = 1 << r.zero_pos();
    let ideals = ideals_in(r, whole, limits)?;
    let nontrivial: Vec<Mask> = ideals
        .into_iter()
        .filter(|&i| i != whole && i != zero)
        .collect();
    for (n, &a) in nontrivial.iter().enumerate() {
        for &b in &nontrivial[n + 1..] {
            if a & b == zero && additive_span(r, a | b) == whole {
                let mut parts = split_search(r, a, limits)?;
                parts.extend(split_search(r, b, limits)?);
                parts.sort_by(|&x, &y| mask::lex_cmp(x, y));
                return Ok(parts);
            }
        }
    }
    Ok(vec![whole])
}

/// Decomposes the space into non-reducible ideal subspaces.
///
/// A ring with a unit contributes one component per primitive orthogonal
/// idempotent `e` of [`decompose_unit`]: the additive span of `R e ∪ e R`.
/// A ring without a unit is split by exhaustive search. Components are joined
/// additively within a ring and by union across rings. The result is replayed
/// through [`verify_decomposition`] before it is returned.
pub fn decompose_artin(
    m: &MultiRingSpace,
    limits: &Limits,
) -> Result<DirectedSumDecomposition, Error> {
    let mut components = Vec::new();
    let mut per_ring_idempotents = BTreeMap::new();
    let mut routes = Vec::with_capacity(m.ring_count());
    for (k, r) in m.rings().iter().enumerate() {
        let mut push = |mask: Mask, idempotent: Option<ElementId>| {
            components.push(Component {
                ring: k,
                selection: SubsetSelection::new(r.set_of(mask), [k]),
                idempotent,
                non_reducible: None,
            });
        };
        if r.unit().is_some() {
            routes.push(Route::Idempotent);
            let es = decompose_unit(r)?;
            for &e in &es {
                let p = r.position(e).ok_or(Error::ForeignElement(e))?;
                let generators = (0..r.size()).fold(0, |acc: Mask, x| {
                    acc | 1 << r.mul_pos(x, p) | 1 << r.mul_pos(p, x)
                });
                push(additive_span(r, generators), Some(e));
            }
            per_ring_idempotents.insert(k, es);
        } else {
            routes.push(Route::Search);
            for piece in split_search(r, r.full_mask(), limits)? {
                push(piece, None);
            }
        }
    }
    for c in &mut components {
        c.non_reducible = match is_non_reducible(m, &c.selection, limits) {
            Ok(v) => Some(v),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
    }
    let joins = components
        .windows(2)
        .map(|w| {
            if w[0].ring == w[1].ring {
                SumMode::Additive
            } else {
                SumMode::Union
            }
        })
        .collect();
    let d = DirectedSumDecomposition {
        components,
        per_ring_idempotents,
        routes,
        joins,
    };
    verify_decomposition(m, &d, limits)
        .map_err(|defect| Error::NoDecomposition(defect.to_string()))?;
    Ok(d)
}

/// Replays every structural claim of a decomposition against the tables.
///
/// Checks idempotency, orthogonality and unit sums of the recorded
/// idempotents; that every component is an ideal subspace; that components
/// of one ring meet only in its zero and add up to the ring directly; that
/// components of different rings meet only in common zeros; that the pieces
/// reconstruct the carrier; and non-reducibility wherever the exhaustive scan
/// fits in `limits`.
pub fn verify_decomposition(
    m: &MultiRingSpace,
    d: &DirectedSumDecomposition,
    limits: &Limits,
) -> Result<(), DecompositionDefect> {
    for (&k, es) in &d.per_ring_idempotents {
        let r = &m.rings()[k];
        for &e in es {
            if r.mul(e, e) != Some(e) {
                return Err(DecompositionDefect::NotIdempotent { ring: k, e });
            }
        }
        for (a, &e) in es.iter().enumerate() {
            for &f in &es[a + 1..] {
                if r.mul(e, f) != Some(r.zero()) || r.mul(f, e) != Some(r.zero()) {
                    return Err(DecompositionDefect::NotOrthogonal { ring: k, e, f });
                }
            }
        }
        let total = es.iter().try_fold(r.zero(), |acc, &e| r.add(acc, e));
        if total != r.unit() {
            return Err(DecompositionDefect::UnitSum { ring: k });
        }
    }

    let expected_joins: Vec<SumMode> = d
        .components
        .windows(2)
        .map(|w| {
            if w[0].ring == w[1].ring {
                SumMode::Additive
            } else {
                SumMode::Union
            }
        })
        .collect();
    if d.joins != expected_joins {
        return Err(DecompositionDefect::Joins);
    }

    for (n, c) in d.components.iter().enumerate() {
        if !is_ideal_subspace_by_ideals(m, &c.selection).unwrap_or(false) {
            return Err(DecompositionDefect::NotIdeal(n));
        }
    }

    let zeros = m.zero_set();
    for (a, ca) in d.components.iter().enumerate() {
        for (b, cb) in d.components.iter().enumerate().skip(a + 1) {
            let meet: ElementSet = ca
                .selection
                .elements
                .intersection(&cb.selection.elements)
                .copied()
                .collect();
            let ok = if ca.ring == cb.ring {
                let z = m.rings()[ca.ring].zero();
                meet.len() == 1 && meet.contains(&z)
            } else {
                meet.is_subset(&zeros)
            };
            if !ok {
                return Err(DecompositionDefect::Overlap(a, b));
            }
        }
    }

    let mut reconstructed = ElementSet::new();
    for (k, r) in m.rings().iter().enumerate() {
        let parts: Vec<&ElementSet> = d
            .components
            .iter()
            .filter(|c| c.ring == k)
            .map(|c| &c.selection.elements)
            .collect();
        let mut total: ElementSet = [r.zero()].into_iter().collect();
        for p in &parts {
            total = sum_set(r, &total, p);
        }
        if total != r.element_set() {
            return Err(DecompositionDefect::Incomplete { ring: k });
        }
        let product: usize = parts.iter().map(|p| p.len()).product();
        if product != r.size() {
            return Err(DecompositionDefect::Dependent { ring: k });
        }
        reconstructed.extend(total);
    }
    if reconstructed != *m.carrier() {
        return Err(DecompositionDefect::CarrierMismatch);
    }

    for (n, c) in d.components.iter().enumerate() {
        match is_non_reducible(m, &c.selection, limits) {
            Ok(true) | Err(Error::CapExceeded { .. }) => {}
            Ok(false) | Err(_) => return Err(DecompositionDefect::Reducible(n)),
        }
    }
    Ok(())
}
