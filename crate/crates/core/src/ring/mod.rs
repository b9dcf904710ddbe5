//! Finite rings given by explicit addition and multiplication tables.
//!
//! A [`FiniteRing`] lives on a subset of some [`Universe`]: its elements are
//! [`ElementId`]s kept in ascending (canonical) order, and its tables are
//! stored over local positions `0..n` in that order. Subsets of a ring are
//! handled as `u64` bitmasks over local positions, which caps rings at
//! [`MAX_RING_SIZE`] elements.

mod ideals;
mod idempotent;
pub(crate) mod mask;
mod validate;

use crate::element::{ElementId, ElementSet, Universe};
use crate::error::Error;
use crate::{Limits, MAX_RING_SIZE};

pub(crate) use ideals::{additive_span, ideal_defect_in, ideals_in, maximal_ideals_in};
pub use ideals::{
    enumerate_ideals, enumerate_ideals_exhaustive, ideal_defect, is_ideal, is_subring,
    maximal_ideals, subring_defect, IdealDefect, SubringDefect,
};
pub use idempotent::{decompose_unit, field_defect, idempotents, is_primitive, FieldDefect};
pub use mask::Mask;
pub use validate::{validate_ring, Axiom, AxiomFailure, ValidationReport};

/// A finite ring `(R; +, ×)` stored as Cayley tables.
///
/// Values built through [`make_ring_from_tables`], [`make_cyclic_ring`] and
/// [`make_product_ring`] satisfy the ring axioms. [`FiniteRing::from_raw_parts`]
/// skips validation so that broken tables can be inspected with
/// [`validate_ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    elements: Vec<ElementId>,
    add: Vec<u8>,
    mul: Vec<u8>,
    zero: usize,
    unit: Option<usize>,
}

impl FiniteRing {
    /// Builds a ring from tables over local positions without checking the
    /// ring axioms.
    ///
    /// `add[i][j]` is the position of `elements[i] + elements[j]` in
    /// `elements`. Elements may be given in any order; they are sorted into
    /// canonical order and the tables permuted to match.
    pub fn from_raw_parts(
        name: impl Into<String>,
        elements: Vec<ElementId>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        unit: Option<usize>,
    ) -> Result<Self, Error> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::MalformedTable("ring carrier is empty".into()));
        }
        if n > MAX_RING_SIZE {
            return Err(Error::CapExceeded {
                what: "ring",
                size: n as u128,
                cap: MAX_RING_SIZE as u128,
            });
        }
        for (name, table) in [("addition", add), ("multiplication", mul)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::MalformedTable(format!(
                    "{name} table is not {n}x{n}"
                )));
            }
            if let Some(&bad) = table.iter().flatten().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(format!(
                    "{name} table entry {bad} is not a position below {n}"
                )));
            }
        }
        if zero >= n || unit.is_some_and(|u| u >= n) {
            return Err(Error::MalformedTable(
                "zero or unit position out of range".into(),
            ));
        }

        // order[k] = original position of the k-th smallest element
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| elements[i]);
        if order.windows(2).any(|w| elements[w[0]] == elements[w[1]]) {
            return Err(Error::MalformedTable(
                "ring carrier repeats an element".into(),
            ));
        }
        let mut rank = vec![0usize; n];
        for (k, &i) in order.iter().enumerate() {
            rank[i] = k;
        }
        let permute = |table: &[Vec<usize>]| -> Vec<u8> {
            let mut out = vec![0u8; n * n];
            for i in 0..n {
                for j in 0..n {
                    out[rank[i] * n + rank[j]] = rank[table[i][j]] as u8;
                }
            }
            out
        };
        Ok(Self {
            name: name.into(),
            elements: order.iter().map(|&i| elements[i]).collect(),
            add: permute(add),
            mul: permute(mul),
            zero: rank[zero],
            unit: unit.map(|u| rank[u]),
        })
    }

    /// `Z_n` placed on the given elements, `k ↦ ids[k]`.
    pub fn cyclic_on(name: impl Into<String>, ids: &[ElementId]) -> Result<Self, Error> {
        let n = ids.len();
        let add: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i * j) % n).collect())
            .collect();
        let unit = if n == 1 { 0 } else { 1 };
        Self::from_raw_parts(name, ids.to_vec(), &add, &mul, 0, Some(unit))
    }

    /// The same ring moved onto other elements: the element at local position
    /// `k` becomes `ids[k]`.
    pub fn with_elements(&self, ids: &[ElementId]) -> Result<Self, Error> {
        if ids.len() != self.size() {
            return Err(Error::MalformedTable(format!(
                "relabelling needs {} elements, got {}",
                self.size(),
                ids.len()
            )));
        }
        Self::from_raw_parts(
            self.name.clone(),
            ids.to_vec(),
            &self.add_rows(),
            &self.mul_rows(),
            self.zero,
            self.unit,
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Carrier in canonical order.
    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn element_set(&self) -> ElementSet {
        self.elements.iter().copied().collect()
    }

    pub fn element(&self, pos: usize) -> ElementId {
        self.elements[pos]
    }

    /// Local position of `id`, if it belongs to the carrier.
    pub fn position(&self, id: ElementId) -> Option<usize> {
        self.elements.binary_search(&id).ok()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.position(id).is_some()
    }

    pub fn zero(&self) -> ElementId {
        self.elements[self.zero]
    }

    pub fn unit(&self) -> Option<ElementId> {
        self.unit.map(|u| self.elements[u])
    }

    pub fn zero_pos(&self) -> usize {
        self.zero
    }

    pub fn unit_pos(&self) -> Option<usize> {
        self.unit
    }

    #[inline]
    pub fn add_pos(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y] as usize
    }

    #[inline]
    pub fn mul_pos(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size() + y] as usize
    }

    /// Additive inverse by table scan.
    pub fn neg_pos(&self, x: usize) -> Option<usize> {
        (0..self.size())
            .find(|&y| self.add_pos(x, y) == self.zero && self.add_pos(y, x) == self.zero)
    }

    /// `x + y`, defined only when both operands lie in the carrier.
    pub fn add(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        Some(self.elements[self.add_pos(self.position(x)?, self.position(y)?)])
    }

    /// `x × y`, defined only when both operands lie in the carrier.
    pub fn mul(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        Some(self.elements[self.mul_pos(self.position(x)?, self.position(y)?)])
    }

    pub fn neg(&self, x: ElementId) -> Option<ElementId> {
        self.neg_pos(self.position(x)?).map(|p| self.elements[p])
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.add_pos(i, j)).collect())
            .collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.mul_pos(i, j)).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (x + 1..n).all(|y| self.mul_pos(x, y) == self.mul_pos(y, x)))
    }

    pub fn full_mask(&self) -> Mask {
        mask::full(self.size())
    }

    /// Bitmask of a set of carrier elements.
    pub fn mask_of<'a, I>(&self, ids: I) -> Result<Mask, Error>
    where
        I: IntoIterator<Item = &'a ElementId>,
    {
        let mut m = 0;
        for &id in ids {
            let p = self.position(id).ok_or(Error::ForeignElement(id))?;
            m |= 1 << p;
        }
        Ok(m)
    }

    /// Bitmask of the carrier elements among `ids`, ignoring the rest.
    pub fn mask_of_intersection<'a, I>(&self, ids: I) -> Mask
    where
        I: IntoIterator<Item = &'a ElementId>,
    {
        ids.into_iter()
            .filter_map(|&id| self.position(id))
            .fold(0, |m, p| m | (1 << p))
    }

    pub fn set_of(&self, m: Mask) -> ElementSet {
        mask::bits(m).map(|p| self.elements[p]).collect()
    }

    /// The subring on `m`, which must be closed under both operations.
    ///
    /// The zero is inherited when it lies in `m`; the unit is re-detected
    /// because a subring can have a different identity (or none).
    pub fn restrict(&self, m: Mask) -> Result<Self, Error> {
        let positions: Vec<usize> = mask::bits(m).collect();
        if positions.is_empty() {
            return Err(Error::MalformedTable("restriction to the empty set".into()));
        }
        let mut local = vec![usize::MAX; self.size()];
        for (k, &p) in positions.iter().enumerate() {
            local[p] = k;
        }
        let table = |op: fn(&Self, usize, usize) -> usize| -> Result<Vec<Vec<usize>>, Error> {
            positions
                .iter()
                .map(|&x| {
                    positions
                        .iter()
                        .map(|&y| {
                            let r = op(self, x, y);
                            if m >> r & 1 == 0 {
                                Err(Error::MalformedTable(format!(
                                    "subset is not closed: {} and {} give {}",
                                    self.elements[x], self.elements[y], self.elements[r]
                                )))
                            } else {
                                Ok(local[r])
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let add = table(Self::add_pos)?;
        let mul = table(Self::mul_pos)?;
        let zero = if m >> self.zero & 1 == 1 {
            local[self.zero]
        } else {
            detect_identity(&add).unwrap_or(0)
        };
        let unit = detect_identity(&mul);
        Self::from_raw_parts(
            self.name.clone(),
            positions.iter().map(|&p| self.elements[p]).collect(),
            &add,
            &mul,
            zero,
            unit,
        )
    }
}

/// First two-sided identity of a square table, by position.
pub(crate) fn detect_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
}

/// `Z_n` on the numbered universe `0..n`.
pub fn make_cyclic_ring(n: usize, limits: &Limits) -> Result<FiniteRing, Error> {
    if n == 0 {
        return Err(Error::MalformedTable("Z_0 has no elements".into()));
    }
    limits.check_ring_size("cyclic ring", n)?;
    let ids: Vec<ElementId> = (0..n).map(ElementId).collect();
    FiniteRing::cyclic_on(format!("Z{n}"), &ids)
}

/// Direct product `a × b` with componentwise operations.
///
/// The pair of local positions `(i, j)` becomes element `i * |b| + j` of a
/// fresh numbered universe; see [`product_labels`] for matching labels.
pub fn make_product_ring(
    a: &FiniteRing,
    b: &FiniteRing,
    limits: &Limits,
) -> Result<FiniteRing, Error> {
    let (na, nb) = (a.size(), b.size());
    let n = na.saturating_mul(nb);
    limits.check_ring_size("product ring", n)?;
    let pair = |i: usize, j: usize| i * nb + j;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for i1 in 0..na {
        for j1 in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    add[pair(i1, j1)][pair(i2, j2)] = pair(a.add_pos(i1, i2), b.add_pos(j1, j2));
                    mul[pair(i1, j1)][pair(i2, j2)] = pair(a.mul_pos(i1, i2), b.mul_pos(j1, j2));
                }
            }
        }
    }
    let unit = match (a.unit, b.unit) {
        (Some(ua), Some(ub)) => Some(pair(ua, ub)),
        _ => None,
    };
    FiniteRing::from_raw_parts(
        format!("{}x{}", a.name, b.name),
        (0..n).map(ElementId).collect(),
        &add,
        &mul,
        pair(a.zero, b.zero),
        unit,
    )
}

/// Labels `"(x,y)"` for the elements of [`make_product_ring`], in element order.
pub fn product_labels<S: AsRef<str>>(a: &[S], b: &[S]) -> Vec<String> {
    a.iter()
        .flat_map(|x| {
            b.iter()
                .map(move |y| format!("({},{})", x.as_ref(), y.as_ref()))
        })
        .collect()
}

/// Builds a ring on the carrier `carrier` of `universe` from label tables.
///
/// Zero and unit are auto-detected (the first two-sided identity in canonical
/// order). When no additive identity exists the first carrier element stands
/// in, so that the report carries an `add-identity` witness. The tables are
/// validated and any axiom failure is returned as [`Error::AxiomViolation`].
pub fn make_ring_from_tables<S: AsRef<str>>(
    universe: &Universe,
    name: &str,
    carrier: &[S],
    add: &[Vec<S>],
    mul: &[Vec<S>],
) -> Result<FiniteRing, Error> {
    let ids = universe.ids(carrier)?;
    let n = ids.len();
    if n == 0 {
        return Err(Error::MalformedTable(format!(
            "ring {name:?} has no elements"
        )));
    }
    if n > MAX_RING_SIZE {
        return Err(Error::CapExceeded {
            what: "ring",
            size: n as u128,
            cap: MAX_RING_SIZE as u128,
        });
    }
    let mut seen = ElementSet::new();
    for (&id, label) in ids.iter().zip(carrier) {
        if !seen.insert(id) {
            return Err(Error::DuplicateLabel(label.as_ref().to_string()));
        }
    }
    let local = |id: ElementId| ids.iter().position(|&x| x == id);

    let mut closure_failures = Vec::new();
    let mut resolve =
        |table: &[Vec<S>], which: &str, axiom: Axiom| -> Result<Vec<Vec<usize>>, Error> {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::MalformedTable(format!(
                    "{which} table of ring {name:?} is not {n}x{n}"
                )));
            }
            let mut out = vec![vec![0; n]; n];
            let mut reported = false;
            for (i, row) in table.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    let id = universe.id(cell.as_ref()).ok_or_else(|| {
                        Error::MalformedTable(format!(
                            "{which} table of ring {name:?} names unknown label {:?}",
                            cell.as_ref()
                        ))
                    })?;
                    match local(id) {
                        Some(p) => out[i][j] = p,
                        None if !reported => {
                            reported = true;
                            closure_failures
                                .push(AxiomFailure::new(axiom, vec![ids[i], ids[j], id]));
                        }
                        None => {}
                    }
                }
            }
            Ok(out)
        };
    let add = resolve(add, "addition", Axiom::AddClosure)?;
    let mul = resolve(mul, "multiplication", Axiom::MulClosure)?;
    if !closure_failures.is_empty() {
        return Err(Error::AxiomViolation(ValidationReport::from_failures(
            closure_failures,
        )));
    }

    // Identity detection in canonical element order.
    let mut canonical: Vec<usize> = (0..n).collect();
    canonical.sort_by_key(|&i| ids[i]);
    let is_identity = |t: &[Vec<usize>], e: usize| (0..n).all(|x| t[e][x] == x && t[x][e] == x);
    let zero = canonical
        .iter()
        .copied()
        .find(|&e| is_identity(&add, e))
        .unwrap_or(canonical[0]);
    let unit = canonical.iter().copied().find(|&e| is_identity(&mul, e));

    let ring = FiniteRing::from_raw_parts(name, ids, &add, &mul, zero, unit)?;
    let report = validate_ring(&ring);
    if report.ok() {
        Ok(ring)
    } else {
        Err(Error::AxiomViolation(report))
    }
}
