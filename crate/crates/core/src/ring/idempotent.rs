use serde::Serialize;

use super::FiniteRing;
use crate::element::ElementId;
use crate::error::Error;

/// All `e` with `e × e = e`, in canonical order. Always contains zero.
pub fn idempotents(r: &FiniteRing) -> Vec<ElementId> {
    idempotent_positions(r)
        .into_iter()
        .map(|p| r.element(p))
        .collect()
}

fn idempotent_positions(r: &FiniteRing) -> Vec<usize> {
    (0..r.size()).filter(|&e| r.mul_pos(e, e) == e).collect()
}

/// First split `e = f + g` into nonzero orthogonal idempotents, smallest `f`
/// first.
fn split(r: &FiniteRing, e: usize, candidates: &[usize]) -> Option<(usize, usize)> {
    let zero = r.zero_pos();
    let neg = |x| r.neg_pos(x).unwrap_or(x);
    candidates.iter().copied().find_map(|f| {
        if f == zero || f == e {
            return None;
        }
        let g = r.add_pos(e, neg(f));
        let orthogonal = r.mul_pos(f, g) == zero && r.mul_pos(g, f) == zero;
        (g != zero && r.mul_pos(g, g) == g && orthogonal).then_some((f, g))
    })
}

/// True when the idempotent `e` is not a sum of two nonzero orthogonal
/// idempotents.
pub fn is_primitive(r: &FiniteRing, e: ElementId) -> Result<bool, Error> {
    let p = r.position(e).ok_or(Error::ForeignElement(e))?;
    Ok(split(r, p, &idempotent_positions(r)).is_none())
}

/// Primitive orthogonal idempotents summing to the unit, in canonical order.
///
/// Starting from `[unit]`, the canonically first idempotent that splits is
/// replaced by its two pieces until none splits. Pieces of a split of `e` lie
/// in `eRe`, so they stay orthogonal to everything `e` was orthogonal to.
/// In the trivial ring the result is `[unit]` (which is also zero).
pub fn decompose_unit(r: &FiniteRing) -> Result<Vec<ElementId>, Error> {
    let unit = r
        .unit_pos()
        .ok_or_else(|| Error::NoUnit(r.name().to_string()))?;
    let candidates = idempotent_positions(r);
    let mut parts = vec![unit];
    while let Some((i, (f, g))) = parts
        .iter()
        .enumerate()
        .find_map(|(i, &e)| split(r, e, &candidates).map(|s| (i, s)))
    {
        parts.splice(i..=i, [f, g]);
        parts.sort_unstable();
    }
    Ok(parts.into_iter().map(|p| r.element(p)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDefect {
    NoUnit,
    /// the trivial ring, where `1 = 0`
    Trivial,
    NonCommutative {
        x: ElementId,
        y: ElementId,
    },
    NotInvertible {
        x: ElementId,
    },
}

/// Why `r` is not a field, or `None` when it is one.
pub fn field_defect(r: &FiniteRing) -> Option<FieldDefect> {
    let Some(unit) = r.unit_pos() else {
        return Some(FieldDefect::NoUnit);
    };
    if unit == r.zero_pos() {
        return Some(FieldDefect::Trivial);
    }
    let n = r.size();
    for x in 0..n {
        for y in x + 1..n {
            if r.mul_pos(x, y) != r.mul_pos(y, x) {
                return Some(FieldDefect::NonCommutative {
                    x: r.element(x),
                    y: r.element(y),
                });
            }
        }
    }
    (0..n)
        .filter(|&x| x != r.zero_pos())
        .find(|&x| !(0..n).any(|y| r.mul_pos(x, y) == unit))
        .map(|x| FieldDefect::NotInvertible { x: r.element(x) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, make_product_ring};
    use crate::Limits;

    fn z(n: usize) -> FiniteRing {
        make_cyclic_ring(n, &Limits::default()).unwrap()
    }

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().map(|&i| ElementId(i)).collect()
    }

    #[test]
    fn idempotents_of_cyclic_rings() {
        assert_eq!(idempotents(&z(6)), ids(&[0, 1, 3, 4]));
        assert_eq!(idempotents(&z(4)), ids(&[0, 1]));
        assert_eq!(idempotents(&z(10)), ids(&[0, 1, 5, 6]));
    }

    #[test]
    fn unit_decompositions() {
        assert_eq!(decompose_unit(&z(6)).unwrap(), ids(&[3, 4]));
        assert_eq!(decompose_unit(&z(4)).unwrap(), ids(&[1]));
        assert_eq!(decompose_unit(&z(10)).unwrap(), ids(&[5, 6]));
        assert_eq!(decompose_unit(&z(1)).unwrap(), ids(&[0]));
    }

    #[test]
    fn three_way_split_in_z30() {
        let r = z(30);
        let parts = decompose_unit(&r).unwrap();
        // CRT idempotents for 2, 3, 5: 15, 10, 6
        assert_eq!(parts, ids(&[6, 10, 15]));
        for &e in &parts {
            assert!(is_primitive(&r, e).unwrap());
        }
    }

    #[test]
    fn no_unit_is_an_error() {
        let even = z(4).restrict(0b0101).unwrap();
        assert!(matches!(decompose_unit(&even), Err(Error::NoUnit(_))));
    }

    #[test]
    fn field_detection() {
        assert_eq!(field_defect(&z(5)), None);
        assert_eq!(
            field_defect(&z(4)),
            Some(FieldDefect::NotInvertible { x: ElementId(2) })
        );
        assert_eq!(field_defect(&z(1)), Some(FieldDefect::Trivial));
        let p = make_product_ring(&z(2), &z(2), &Limits::default()).unwrap();
        assert!(matches!(
            field_defect(&p),
            Some(FieldDefect::NotInvertible { .. })
        ));
    }
}
