//! Finite multi-ring spaces.
//!
//! A multi-ring space is a union of finite rings `R_1, .., R_m` over one shared
//! universe, each ring carrying its own partial pair of operations `(+_i, ×_i)`.
//! Everything here is stored extensionally as Cayley tables so that every
//! property can be decided by exhaustive search:
//!
//! - [`ring`]: finite rings, axiom validation, subrings, ideals, idempotents;
//! - [`multispace`]: validated unions of rings, subspace and ideal-subspace
//!   criteria (per-ring and directly from the definitions);
//! - [`chain`]: maximal ideal chains and ideal-subspace chains under an
//!   operation order;
//! - [`decomposition`]: directed sums, non-reducibility and the decomposition
//!   of a space into non-reducible ideal subspaces via orthogonal idempotents;
//! - [`document`]: the JSON description format used by the CLI and bindings.
//!
//! Ring indices are 0-based throughout the library; the CLI and the Python
//! bindings expose them 1-based.

pub mod chain;
pub mod decomposition;
pub mod document;
pub mod element;
pub mod error;
pub mod multispace;
pub mod ring;

pub use chain::{
    chain_is_valid, enumerate_ideal_subspace_chains, ideal_subspace_chain, is_artin,
    max_ideal_chain, ArtinReport, IdealChain, OperationOrder,
};
pub use decomposition::{
    decompose_artin, directed_sum_check, is_non_reducible, verify_decomposition, Component,
    DirectedSumDecomposition, Route, SumMode,
};
pub use document::{parse_spec, serialize_space, ParseError, SpaceDocument};
pub use element::{ElementId, ElementSet, Universe};
pub use error::Error;
pub use multispace::{
    build_multispace, is_ideal_subspace_by_ideals, is_ideal_subspace_direct, is_multi_field,
    is_subspace_by_subgroups, is_subspace_by_subrings, is_subspace_direct, MixedLaw,
    MixedLawViolation, MultiRingSpace, SubsetSelection,
};
pub use ring::{
    decompose_unit, enumerate_ideals, enumerate_ideals_exhaustive, idempotents, is_ideal,
    is_subring, make_cyclic_ring, make_product_ring, make_ring_from_tables, maximal_ideals,
    validate_ring, Axiom, AxiomFailure, FiniteRing, ValidationReport,
};

/// Hard upper bound on ring size: subsets of a ring are `u64` bitmasks.
pub const MAX_RING_SIZE: usize = 64;

/// Size caps for constructions and exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring accepted by constructors and ideal enumeration.
    pub max_ring_size: usize,
    /// Largest number of candidate subsets (or ideals, or chains) any single
    /// exhaustive search may visit.
    pub subset_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_ring_size: MAX_RING_SIZE,
            subset_budget: 1 << 20,
        }
    }
}

impl Limits {
    pub(crate) fn check_ring_size(&self, what: &'static str, size: usize) -> Result<(), Error> {
        let cap = self.max_ring_size.min(MAX_RING_SIZE);
        if size > cap {
            return Err(Error::CapExceeded {
                what,
                size: size as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    /// Fails when an exhaustive search over `2^bits * factor` candidates would
    /// exceed the subset budget.
    pub(crate) fn check_subsets(
        &self,
        what: &'static str,
        bits: usize,
        factor: u64,
    ) -> Result<(), Error> {
        let size = if bits >= 127 {
            u128::MAX
        } else {
            (1u128 << bits).saturating_mul(factor as u128)
        };
        if size > self.subset_budget as u128 {
            return Err(Error::CapExceeded {
                what,
                size,
                cap: self.subset_budget as u128,
            });
        }
        Ok(())
    }
}
