//! Subrings and two-sided ideals.
//!
//! Ideals are enumerated by closing the principal ideal of every element and
//! then closing that family under ideal sums; every ideal of a finite ring is
//! the sum of the principal ideals of its elements, so the fixpoint is the
//! whole lattice. [`enumerate_ideals_exhaustive`] filters all `2^n` subsets
//! instead and serves as the independent check.

use std::collections::HashSet;

use serde::Serialize;

use super::mask::{self, Mask};
use super::FiniteRing;
use crate::element::{ElementId, ElementSet};
use crate::error::Error;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SubringDefect {
    Empty,
    /// `x - y` leaves the set
    Difference {
        x: ElementId,
        y: ElementId,
        result: ElementId,
    },
    /// `x × y` leaves the set
    Product {
        x: ElementId,
        y: ElementId,
        result: ElementId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IdealDefect {
    Empty,
    /// element of the candidate outside the enclosing ring
    Outside {
        x: ElementId,
    },
    Difference {
        x: ElementId,
        y: ElementId,
        result: ElementId,
    },
    /// `r × a` leaves the set
    LeftAbsorption {
        r: ElementId,
        a: ElementId,
        result: ElementId,
    },
    /// `a × r` leaves the set
    RightAbsorption {
        a: ElementId,
        r: ElementId,
        result: ElementId,
    },
}

fn negations(r: &FiniteRing) -> Vec<usize> {
    (0..r.size()).map(|y| r.neg_pos(y).unwrap_or(y)).collect()
}

/// First `(x, y, x - y)` with `x, y ∈ m` and `x - y ∉ m`.
pub(crate) fn subgroup_defect(r: &FiniteRing, m: Mask) -> Option<(usize, usize, usize)> {
    let neg = negations(r);
    for x in mask::bits(m) {
        for y in mask::bits(m) {
            let d = r.add_pos(x, neg[y]);
            if !mask::has(m, d) {
                return Some((x, y, d));
            }
        }
    }
    None
}

/// Why `m` fails to be a subring of `r`, or `None` when it is one.
pub fn subring_defect(r: &FiniteRing, m: Mask) -> Option<SubringDefect> {
    if m == 0 {
        return Some(SubringDefect::Empty);
    }
    let id = |p| r.element(p);
    if let Some((x, y, d)) = subgroup_defect(r, m) {
        return Some(SubringDefect::Difference {
            x: id(x),
            y: id(y),
            result: id(d),
        });
    }
    for x in mask::bits(m) {
        for y in mask::bits(m) {
            let p = r.mul_pos(x, y);
            if !mask::has(m, p) {
                return Some(SubringDefect::Product {
                    x: id(x),
                    y: id(y),
                    result: id(p),
                });
            }
        }
    }
    None
}

/// Nonempty, closed under `x - y`, closed under `×`.
pub fn is_subring<'a, I>(r: &FiniteRing, s: I) -> Result<bool, Error>
where
    I: IntoIterator<Item = &'a ElementId>,
{
    Ok(subring_defect(r, r.mask_of(s)?).is_none())
}

/// Why `m` fails to be an ideal of the subring `ambient` of `r`.
pub(crate) fn ideal_defect_in(r: &FiniteRing, ambient: Mask, m: Mask) -> Option<IdealDefect> {
    if m == 0 {
        return Some(IdealDefect::Empty);
    }
    let id = |p| r.element(p);
    if let Some(x) = mask::bits(m & !ambient).next() {
        return Some(IdealDefect::Outside { x: id(x) });
    }
    if let Some((x, y, d)) = subgroup_defect(r, m) {
        return Some(IdealDefect::Difference {
            x: id(x),
            y: id(y),
            result: id(d),
        });
    }
    for a in mask::bits(m) {
        for s in mask::bits(ambient) {
            let left = r.mul_pos(s, a);
            if !mask::has(m, left) {
                return Some(IdealDefect::LeftAbsorption {
                    r: id(s),
                    a: id(a),
                    result: id(left),
                });
            }
            let right = r.mul_pos(a, s);
            if !mask::has(m, right) {
                return Some(IdealDefect::RightAbsorption {
                    a: id(a),
                    r: id(s),
                    result: id(right),
                });
            }
        }
    }
    None
}

pub fn ideal_defect(r: &FiniteRing, m: Mask) -> Option<IdealDefect> {
    ideal_defect_in(r, r.full_mask(), m)
}

/// Additive subgroup that also absorbs multiplication by every ring element
/// on both sides.
pub fn is_ideal<'a, I>(r: &FiniteRing, s: I) -> Result<bool, Error>
where
    I: IntoIterator<Item = &'a ElementId>,
{
    Ok(ideal_defect(r, r.mask_of(s)?).is_none())
}

/// Additive subgroup generated by `seed`.
pub(crate) fn additive_span(r: &FiniteRing, seed: Mask) -> Mask {
    let mut set = seed | 1 << r.zero_pos();
    loop {
        let mut next = set;
        for x in mask::bits(set) {
            for y in mask::bits(set) {
                next |= 1 << r.add_pos(x, y);
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Smallest ideal of the subring `ambient` containing `seed`.
fn ideal_closure(r: &FiniteRing, ambient: Mask, seed: Mask) -> Mask {
    let mut set = seed | 1 << r.zero_pos();
    loop {
        let mut next = set;
        for x in mask::bits(set) {
            for y in mask::bits(set) {
                next |= 1 << r.add_pos(x, y);
            }
            for a in mask::bits(ambient) {
                next |= 1 << r.mul_pos(a, x) | 1 << r.mul_pos(x, a);
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

fn sum(r: &FiniteRing, a: Mask, b: Mask) -> Mask {
    let mut out = 0;
    for x in mask::bits(a) {
        for y in mask::bits(b) {
            out |= 1 << r.add_pos(x, y);
        }
    }
    out
}

/// All ideals of the subring `ambient`, ordered by size then lexicographically.
pub(crate) fn ideals_in(
    r: &FiniteRing,
    ambient: Mask,
    limits: &Limits,
) -> Result<Vec<Mask>, Error> {
    limits.check_ring_size("ring", ambient.count_ones() as usize)?;
    let mut principals: Vec<Mask> = mask::bits(ambient)
        .map(|g| ideal_closure(r, ambient, 1 << g))
        .collect();
    principals.sort_unstable();
    principals.dedup();

    let zero_ideal = ideal_closure(r, ambient, 0);
    let over_budget = |count: usize| {
        (count as u64 > limits.subset_budget).then_some(Error::CapExceeded {
            what: "ideal lattice",
            size: count as u128,
            cap: limits.subset_budget as u128,
        })
    };
    let mut found: HashSet<Mask> = HashSet::new();
    let mut queue = Vec::new();
    for m in std::iter::once(zero_ideal).chain(principals.iter().copied()) {
        if found.insert(m) {
            queue.push(m);
        }
    }
    if let Some(e) = over_budget(found.len()) {
        return Err(e);
    }
    while let Some(i) = queue.pop() {
        for &p in &principals {
            let s = sum(r, i, p);
            if found.insert(s) {
                if let Some(e) = over_budget(found.len()) {
                    return Err(e);
                }
                queue.push(s);
            }
        }
    }
    let mut out: Vec<Mask> = found.into_iter().collect();
    out.sort_by(|&a, &b| mask::size_lex_cmp(a, b));
    Ok(out)
}

/// Proper ideals of `ambient` that are maximal under inclusion, in
/// lexicographic order of their sorted element lists.
pub(crate) fn maximal_ideals_in(
    r: &FiniteRing,
    ambient: Mask,
    limits: &Limits,
) -> Result<Vec<Mask>, Error> {
    let ideals = ideals_in(r, ambient, limits)?;
    let proper: Vec<Mask> = ideals.into_iter().filter(|&i| i != ambient).collect();
    let mut maximal: Vec<Mask> = proper
        .iter()
        .copied()
        .filter(|&i| !proper.iter().any(|&j| j != i && j & i == i))
        .collect();
    maximal.sort_by(|&a, &b| mask::lex_cmp(a, b));
    Ok(maximal)
}

/// All ideals of `r`, ordered by size and then lexicographically.
pub fn enumerate_ideals(r: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>, Error> {
    Ok(ideals_in(r, r.full_mask(), limits)?
        .into_iter()
        .map(|m| r.set_of(m))
        .collect())
}

/// All ideals of `r` by filtering every subset of the carrier.
pub fn enumerate_ideals_exhaustive(
    r: &FiniteRing,
    limits: &Limits,
) -> Result<Vec<ElementSet>, Error> {
    limits.check_subsets("ideal subset scan", r.size(), 1)?;
    let mut ideals: Vec<Mask> = mask::submasks(r.full_mask())
        .filter(|&m| ideal_defect(r, m).is_none())
        .collect();
    ideals.sort_by(|&a, &b| mask::size_lex_cmp(a, b));
    Ok(ideals.into_iter().map(|m| r.set_of(m)).collect())
}

pub fn maximal_ideals(r: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>, Error> {
    Ok(maximal_ideals_in(r, r.full_mask(), limits)?
        .into_iter()
        .map(|m| r.set_of(m))
        .collect())
}
