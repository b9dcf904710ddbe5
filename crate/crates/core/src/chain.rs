//! Maximal ideal chains and ideal-subspace chains.
//!
//! For one ring the chain repeatedly steps to the lexicographically smallest
//! maximal ideal of the current term, the term itself being treated as a
//! ring, until the zero ideal is reached. For a multi-ring space the chain
//! runs one stage per operation pair in the given order: stage `k` descends
//! the part of the current term inside ring `order[k]` along that ring's
//! chain while every other part stays as it is.

use serde::Serialize;

use crate::element::ElementSet;
use crate::error::Error;
use crate::multispace::{
    is_ideal_subspace_by_ideals_within, is_subspace_by_subrings, MultiRingSpace, SubsetSelection,
};
use crate::ring::{mask, maximal_ideals_in, FiniteRing, Mask};
use crate::Limits;

/// A permutation of the ring indices (0-based); earlier entries are
/// descended first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OperationOrder(Vec<usize>);

impl OperationOrder {
    pub fn new(order: Vec<usize>, ring_count: usize) -> Result<Self, Error> {
        let mut seen = vec![false; ring_count];
        for &k in &order {
            if k >= ring_count || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidOrder(order));
            }
        }
        if order.len() != ring_count {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Self(order))
    }

    pub fn identity(ring_count: usize) -> Self {
        Self((0..ring_count).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A strictly descending chain of ideal subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealChain {
    pub order: OperationOrder,
    /// `terms[0]` is the whole space with every operation pair.
    pub terms: Vec<SubsetSelection>,
    /// `stage_starts[k]` is the index of the first term produced while
    /// descending ring `order[k]` (equal to the next stage's start when the
    /// stage produced nothing).
    pub stage_starts: Vec<usize>,
}

impl IdealChain {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of strict inclusions, one less than the number of terms.
    pub fn steps(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

fn chain_masks(r: &FiniteRing, start: Mask, limits: &Limits) -> Result<Vec<Mask>, Error> {
    let mut out = vec![start];
    let mut current = start;
    while let Some(&next) = maximal_ideals_in(r, current, limits)?.first() {
        out.push(next);
        current = next;
    }
    Ok(out)
}

/// Maximal chain `R ⊃ I_1 ⊃ .. ⊃ {0}` of `r`, always stepping to the
/// lexicographically smallest maximal ideal of the current term.
pub fn max_ideal_chain(r: &FiniteRing, limits: &Limits) -> Result<Vec<ElementSet>, Error> {
    Ok(chain_masks(r, r.full_mask(), limits)?
        .into_iter()
        .map(|m| r.set_of(m))
        .collect())
}

/// Successor of `current` obtained by replacing its part in ring `k` with
/// the ideal `ideal` of that part.
fn step(
    m: &MultiRingSpace,
    current: &SubsetSelection,
    k: usize,
    part: Mask,
    ideal: Mask,
) -> SubsetSelection {
    let removed = m.rings()[k].set_of(part & !ideal);
    SubsetSelection {
        elements: current.elements.difference(&removed).copied().collect(),
        ops: current.ops.clone(),
    }
}

/// Builds the ideal-subspace chain of `m` under `order`.
///
/// Every produced term is re-checked to be an ideal subspace of its
/// predecessor; when overlapping carriers break this the construction stops
/// with [`Error::StepInvalid`].
pub fn ideal_subspace_chain(
    m: &MultiRingSpace,
    order: &OperationOrder,
    limits: &Limits,
) -> Result<IdealChain, Error> {
    if order.0.len() != m.ring_count() {
        return Err(Error::InvalidOrder(order.0.clone()));
    }
    let mut terms = vec![m.full_selection()];
    let mut stage_starts = Vec::with_capacity(order.0.len());
    for (stage, &k) in order.0.iter().enumerate() {
        stage_starts.push(terms.len());
        let r = &m.rings()[k];
        loop {
            let current = terms.last().expect("chain starts with the full space");
            let part = m.component(k, &current.elements);
            let Some(&ideal) = maximal_ideals_in(r, part, limits)?.first() else {
                break;
            };
            let next = step(m, current, k, part, ideal);
            if !is_ideal_subspace_by_ideals_within(m, current, &next)? {
                return Err(Error::StepInvalid {
                    stage,
                    ring: k,
                    term: next,
                });
            }
            terms.push(next);
        }
    }
    Ok(IdealChain {
        order: order.clone(),
        terms,
        stage_starts,
    })
}

/// Every chain the construction can produce when all maximal choices are
/// explored instead of the smallest one. Fails once more than
/// `limits.subset_budget` chains would be produced.
pub fn enumerate_ideal_subspace_chains(
    m: &MultiRingSpace,
    order: &OperationOrder,
    limits: &Limits,
) -> Result<Vec<IdealChain>, Error> {
    if order.0.len() != m.ring_count() {
        return Err(Error::InvalidOrder(order.0.clone()));
    }
    let mut out = Vec::new();
    let mut terms = vec![m.full_selection()];
    let mut starts = Vec::new();
    explore(m, order, 0, &mut terms, &mut starts, &mut out, limits)?;
    Ok(out)
}

fn explore(
    m: &MultiRingSpace,
    order: &OperationOrder,
    stage: usize,
    terms: &mut Vec<SubsetSelection>,
    starts: &mut Vec<usize>,
    out: &mut Vec<IdealChain>,
    limits: &Limits,
) -> Result<(), Error> {
    if stage == order.0.len() {
        if out.len() as u64 >= limits.subset_budget {
            return Err(Error::CapExceeded {
                what: "chain enumeration",
                size: out.len() as u128 + 1,
                cap: limits.subset_budget as u128,
            });
        }
        out.push(IdealChain {
            order: order.clone(),
            terms: terms.clone(),
            stage_starts: starts.clone(),
        });
        return Ok(());
    }
    starts.push(terms.len());
    descend(m, order, stage, terms, starts, out, limits)?;
    starts.pop();
    Ok(())
}

fn descend(
    m: &MultiRingSpace,
    order: &OperationOrder,
    stage: usize,
    terms: &mut Vec<SubsetSelection>,
    starts: &mut Vec<usize>,
    out: &mut Vec<IdealChain>,
    limits: &Limits,
) -> Result<(), Error> {
    let k = order.0[stage];
    let current = terms.last().expect("chain is never empty").clone();
    let part = m.component(k, &current.elements);
    let choices = maximal_ideals_in(&m.rings()[k], part, limits)?;
    if choices.is_empty() {
        return explore(m, order, stage + 1, terms, starts, out, limits);
    }
    for ideal in choices {
        let next = step(m, &current, k, part, ideal);
        if !is_ideal_subspace_by_ideals_within(m, &current, &next)? {
            return Err(Error::StepInvalid {
                stage,
                ring: k,
                term: next,
            });
        }
        terms.push(next);
        descend(m, order, stage, terms, starts, out, limits)?;
        terms.pop();
    }
    Ok(())
}

/// Checks a chain against the definition: the first term is a subspace, each
/// later term is a strictly smaller ideal subspace of its predecessor, and no
/// ideal subspace of the predecessor lies strictly between the two.
///
/// The between-check visits every element set between consecutive terms with
/// every nonempty subset of the predecessor's operation pairs.
pub fn chain_is_valid(
    m: &MultiRingSpace,
    chain: &IdealChain,
    limits: &Limits,
) -> Result<bool, Error> {
    let Some(first) = chain.terms.first() else {
        return Ok(false);
    };
    if !is_subspace_by_subrings(m, first)? {
        return Ok(false);
    }
    for pair in chain.terms.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        if !(next.elements.is_subset(&prev.elements) && next.elements.len() < prev.elements.len()) {
            return Ok(false);
        }
        if !is_ideal_subspace_by_ideals_within(m, prev, next)? {
            return Ok(false);
        }
        if has_ideal_between(m, prev, next, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_ideal_between(
    m: &MultiRingSpace,
    prev: &SubsetSelection,
    next: &SubsetSelection,
    limits: &Limits,
) -> Result<bool, Error> {
    let free: Vec<_> = prev.elements.difference(&next.elements).copied().collect();
    let ops: Vec<usize> = prev.ops.iter().copied().collect();
    let op_subsets = (1u64 << ops.len()) - 1;
    limits.check_subsets("between-term scan", free.len(), op_subsets)?;
    let free_mask = mask::full(free.len());
    for pick in mask::submasks(free_mask) {
        if pick == 0 || pick == free_mask {
            continue;
        }
        let mut elements = next.elements.clone();
        elements.extend(mask::bits(pick).map(|b| free[b]));
        for op_pick in 1..=op_subsets {
            let candidate = SubsetSelection {
                elements: elements.clone(),
                ops: mask::bits(op_pick).map(|b| ops[b]).collect(),
            };
            if is_ideal_subspace_by_ideals_within(m, prev, &candidate)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Finite ideal-subspace chain witness for a space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArtinReport {
    pub artin: bool,
    /// Chain under the identity order.
    pub witness: IdealChain,
    /// Number of terms in each ring's maximal ideal chain, by ring index.
    pub ring_chain_lengths: Vec<usize>,
}

/// Artin check: every ring has a finite maximal ideal chain, and the space
/// then has the finite chain returned as witness.
pub fn is_artin(m: &MultiRingSpace, limits: &Limits) -> Result<ArtinReport, Error> {
    let ring_chain_lengths = m
        .rings()
        .iter()
        .map(|r| max_ideal_chain(r, limits).map(|c| c.len()))
        .collect::<Result<Vec<_>, _>>()?;
    let witness = ideal_subspace_chain(m, &OperationOrder::identity(m.ring_count()), limits)?;
    Ok(ArtinReport {
        artin: true,
        witness,
        ring_chain_lengths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{ElementId, Universe};
    use crate::multispace::build_multispace;
    use crate::ring::make_cyclic_ring;

    fn z(n: usize) -> FiniteRing {
        make_cyclic_ring(n, &Limits::default()).unwrap()
    }

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().map(|&i| ElementId(i)).collect()
    }

    fn z4z6() -> MultiRingSpace {
        let labels = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5"];
        let u = Universe::new(&labels).unwrap();
        let a = FiniteRing::cyclic_on("Z4", &u.ids(&labels[..4]).unwrap()).unwrap();
        let b = FiniteRing::cyclic_on("Z6", &u.ids(&labels[4..]).unwrap()).unwrap();
        build_multispace(u, vec![a, b], &Limits::default()).unwrap()
    }

    fn labels(m: &MultiRingSpace, s: &SubsetSelection) -> Vec<String> {
        m.labels_of(&s.elements)
    }

    #[test]
    fn ring_chains() {
        let l = Limits::default();
        assert_eq!(
            max_ideal_chain(&z(6), &l).unwrap(),
            vec![set(&[0, 1, 2, 3, 4, 5]), set(&[0, 2, 4]), set(&[0])]
        );
        assert_eq!(
            max_ideal_chain(&z(4), &l).unwrap(),
            vec![set(&[0, 1, 2, 3]), set(&[0, 2]), set(&[0])]
        );
        assert_eq!(
            max_ideal_chain(&z(5), &l).unwrap(),
            vec![set(&[0, 1, 2, 3, 4]), set(&[0])]
        );
        let z12 = max_ideal_chain(&z(12), &l).unwrap();
        assert_eq!(z12.len(), 4);
        assert_eq!(z12[1], set(&[0, 2, 4, 6, 8, 10]));
        assert_eq!(z12[2], set(&[0, 4, 8]));
    }

    #[test]
    fn z4z6_chain_in_both_orders() {
        let m = z4z6();
        let l = Limits::default();
        let c = ideal_subspace_chain(&m, &OperationOrder::new(vec![0, 1], 2).unwrap(), &l).unwrap();
        let got: Vec<Vec<String>> = c.terms.iter().map(|t| labels(&m, t)).collect();
        let expected: Vec<Vec<&str>> = vec![
            vec!["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5"],
            vec!["a0", "a2", "b0", "b1", "b2", "b3", "b4", "b5"],
            vec!["a0", "b0", "b1", "b2", "b3", "b4", "b5"],
            vec!["a0", "b0", "b2", "b4"],
            vec!["a0", "b0"],
        ];
        assert_eq!(got, expected);
        assert_eq!(c.stage_starts, vec![1, 3]);
        assert!(chain_is_valid(&m, &c, &l).unwrap());

        let c = ideal_subspace_chain(&m, &OperationOrder::new(vec![1, 0], 2).unwrap(), &l).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.stage_starts, vec![1, 3]);
        assert_eq!(labels(&m, &c.terms[2]), vec!["a0", "a1", "a2", "a3", "b0"]);
    }

    #[test]
    fn single_ring_chain() {
        let u = Universe::numbered(5);
        let r = FiniteRing::cyclic_on("Z5", &u.ids(&["0", "1", "2", "3", "4"]).unwrap()).unwrap();
        let m = build_multispace(u, vec![r], &Limits::default()).unwrap();
        let c = ideal_subspace_chain(&m, &OperationOrder::identity(1), &Limits::default()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.terms[1].elements, set(&[0]));
    }

    #[test]
    fn orders_must_be_permutations() {
        assert!(OperationOrder::new(vec![0, 0], 2).is_err());
        assert!(OperationOrder::new(vec![0], 2).is_err());
        assert!(OperationOrder::new(vec![2, 0], 2).is_err());
        assert!(OperationOrder::new(vec![1, 0], 2).is_ok());
    }

    #[test]
    fn damaged_chains_are_rejected() {
        let m = z4z6();
        let l = Limits::default();
        let c = ideal_subspace_chain(&m, &OperationOrder::identity(2), &l).unwrap();
        for interior in 1..c.len() - 1 {
            let mut d = c.clone();
            d.terms.remove(interior);
            assert!(
                !chain_is_valid(&m, &d, &l).unwrap(),
                "deleted term {interior}"
            );
        }
        let mut d = c.clone();
        d.terms = vec![m.full_selection(), m.full_selection()];
        assert!(!chain_is_valid(&m, &d, &l).unwrap());
    }

    #[test]
    fn all_maximal_choices_are_enumerated() {
        let m = z4z6();
        let l = Limits::default();
        let chains = enumerate_ideal_subspace_chains(&m, &OperationOrder::identity(2), &l).unwrap();
        // Z_4 has one maximal chain, Z_6 has two ({0,2,4} or {0,3} first).
        assert_eq!(chains.len(), 2);
        assert_eq!(
            chains[0],
            ideal_subspace_chain(&m, &OperationOrder::identity(2), &l).unwrap()
        );
        for c in &chains {
            assert!(chain_is_valid(&m, c, &l).unwrap());
        }
        let tight = Limits {
            subset_budget: 1,
            ..l
        };
        assert!(matches!(
            enumerate_ideal_subspace_chains(&m, &OperationOrder::identity(2), &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn artin_reports() {
        let l = Limits::default();
        let rep = is_artin(&z4z6(), &l).unwrap();
        assert!(rep.artin);
        assert_eq!(rep.witness.len(), 5);
        assert_eq!(rep.ring_chain_lengths, vec![3, 3]);

        let u = Universe::new(&["e"]).unwrap();
        let t = FiniteRing::cyclic_on("T", &u.ids(&["e"]).unwrap()).unwrap();
        let m = build_multispace(u, vec![t], &l).unwrap();
        let rep = is_artin(&m, &l).unwrap();
        assert_eq!(rep.witness.len(), 1);
    }
}
