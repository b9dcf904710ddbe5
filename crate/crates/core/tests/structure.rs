//! Structural properties of ideal lattices, chains and decompositions on
//! small product rings and disjoint cyclic spaces.

use std::collections::BTreeSet;

use multiring::chain::{ideal_subspace_chain, max_ideal_chain, OperationOrder};
use multiring::decomposition::decompose_artin;
use multiring::{
    build_multispace, decompose_unit, directed_sum_check, enumerate_ideals, make_cyclic_ring,
    make_product_ring, maximal_ideals, ElementId, ElementSet, FiniteRing, Limits, MultiRingSpace,
    SubsetSelection, SumMode, Universe,
};
use proptest::prelude::*;

fn product(a: usize, b: usize) -> FiniteRing {
    let l = Limits::default();
    make_product_ring(
        &make_cyclic_ring(a, &l).unwrap(),
        &make_cyclic_ring(b, &l).unwrap(),
        &l,
    )
    .unwrap()
}

/// `Z_a x Z_b` with at most 12 elements.
fn small_product() -> impl Strategy<Value = FiniteRing> {
    (1usize..=6, 1usize..=6)
        .prop_filter("at most 12 elements", |(a, b)| a * b <= 12)
        .prop_map(|(a, b)| product(a, b))
}

fn single(r: &FiniteRing) -> MultiRingSpace {
    build_multispace(
        Universe::numbered(r.size()),
        vec![r.clone()],
        &Limits::default(),
    )
    .unwrap()
}

fn multiples(r: &FiniteRing, e: ElementId) -> ElementSet {
    r.elements().iter().map(|&x| r.mul(x, e).unwrap()).collect()
}

fn sumset(r: &FiniteRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| r.add(x, y).unwrap()))
        .collect()
}

fn disjoint_cyclic() -> impl Strategy<Value = MultiRingSpace> {
    prop::collection::vec(2usize..=12, 1..=3).prop_map(|sizes| {
        let total: usize = sizes.iter().sum();
        let u = Universe::numbered(total);
        let ids: Vec<ElementId> = u.ids_iter().collect();
        let mut next = 0;
        let rings = sizes
            .iter()
            .enumerate()
            .map(|(k, &n)| {
                next += n;
                FiniteRing::cyclic_on(format!("Z{n}_{k}"), &ids[next - n..next]).unwrap()
            })
            .collect();
        build_multispace(u, rings, &Limits::default()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn maximal_ideals_are_maximal(r in small_product()) {
        let l = Limits::default();
        let ideals = enumerate_ideals(&r, &l).unwrap();
        let whole = r.element_set();
        for m in maximal_ideals(&r, &l).unwrap() {
            prop_assert!(ideals.contains(&m));
            prop_assert!(m != whole);
            prop_assert!(!ideals
                .iter()
                .any(|i| m.is_subset(i) && *i != m && *i != whole));
        }
    }

    #[test]
    fn unit_idempotents_split_the_ring(r in small_product()) {
        let pieces: Vec<ElementSet> = decompose_unit(&r)
            .unwrap()
            .into_iter()
            .map(|e| multiples(&r, e))
            .collect();
        let zero: ElementSet = [r.zero()].into();
        for (i, a) in pieces.iter().enumerate() {
            for b in &pieces[i + 1..] {
                prop_assert_eq!(&a.intersection(b).copied().collect::<ElementSet>(), &zero);
            }
        }
        let covered = pieces.iter().fold(zero.clone(), |acc, p| sumset(&r, &acc, p));
        prop_assert_eq!(covered, r.element_set());
    }

    #[test]
    fn single_ring_decomposition_follows_the_unit_split(r in small_product()) {
        let l = Limits::default();
        let d = decompose_artin(&single(&r), &l).unwrap();
        let from_unit: BTreeSet<(ElementId, ElementSet)> = decompose_unit(&r)
            .unwrap()
            .into_iter()
            .map(|e| (e, multiples(&r, e)))
            .collect();
        let got: BTreeSet<(ElementId, ElementSet)> = d
            .components
            .iter()
            .map(|c| (c.idempotent.unwrap(), c.selection.elements.clone()))
            .collect();
        prop_assert_eq!(got, from_unit);
    }

    #[test]
    fn additive_sums_have_the_product_size(r in small_product()) {
        let l = Limits::default();
        let m = single(&r);
        let ideals: Vec<SubsetSelection> = enumerate_ideals(&r, &l)
            .unwrap()
            .into_iter()
            .map(|i| SubsetSelection::new(i, [0]))
            .collect();
        for whole in &ideals {
            let inside: Vec<_> = ideals
                .iter()
                .filter(|i| i.elements.is_subset(&whole.elements))
                .collect();
            for a in &inside {
                for b in &inside {
                    if directed_sum_check(&m, whole, a, b, SumMode::Additive).unwrap() {
                        let overlap = a.elements.intersection(&b.elements).count();
                        prop_assert_eq!(
                            whole.elements.len() * overlap,
                            a.elements.len() * b.elements.len()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chain_stages_touch_one_ring(m in disjoint_cyclic(), turn in 0usize..3) {
        let l = Limits::default();
        let mut order: Vec<usize> = (0..m.ring_count()).collect();
        order.rotate_left(turn % m.ring_count());
        let order = OperationOrder::new(order, m.ring_count()).unwrap();
        let c = ideal_subspace_chain(&m, &order, &l).unwrap();

        let expected: usize = m
            .rings()
            .iter()
            .map(|r| max_ideal_chain(r, &l).unwrap().len() - 1)
            .sum();
        prop_assert_eq!(c.steps(), expected);

        for (k, &active) in order.as_slice().iter().enumerate() {
            let end = c.stage_starts.get(k + 1).copied().unwrap_or(c.len());
            for j in c.stage_starts[k].max(1)..end {
                for (i, ring) in m.rings().iter().enumerate().filter(|&(i, _)| i != active) {
                    let part = |t: &SubsetSelection| -> ElementSet {
                        t.elements.iter().copied().filter(|&e| ring.contains(e)).collect()
                    };
                    prop_assert_eq!(part(&c.terms[j - 1]), part(&c.terms[j]), "ring {} in stage {}", i, k);
                }
            }
        }
    }
}
