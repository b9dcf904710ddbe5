use thiserror::Error;

use crate::document::ParseError;
use crate::element::ElementId;
use crate::multispace::{MixedLawViolation, SubsetSelection};
use crate::ring::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("ring axioms violated: {0}")]
    AxiomViolation(ValidationReport),

    #[error("element {0} is not in the ring or space carrier")]
    ForeignElement(ElementId),

    #[error("ring {0:?} has no multiplicative unit")]
    NoUnit(String),

    #[error("ring {index} ({name:?}) is not a ring: {report}")]
    RingInvalid {
        index: usize,
        name: String,
        report: ValidationReport,
    },

    #[error("{0}")]
    MixedLaw(MixedLawViolation),

    #[error("a multi-ring space needs at least one ring")]
    EmptyFamily,

    #[error("a selection needs at least one operation pair")]
    EmptyOps,

    #[error("ring index {index} out of range (space has {count} rings)")]
    RingIndexOutOfRange { index: usize, count: usize },

    #[error("label {0:?} appears more than once")]
    DuplicateLabel(String),

    #[error("label at position {position} is empty")]
    EmptyLabel { position: usize },

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("operation order is not a permutation of the ring indices: {0:?}")]
    InvalidOrder(Vec<usize>),

    #[error(
        "chain step produced a term that is not an ideal subspace of its predecessor: {term:?}"
    )]
    StepInvalid {
        stage: usize,
        ring: usize,
        term: SubsetSelection,
    },

    #[error("selection is not an ideal subspace of the enclosing selection: {0:?}")]
    NotIdealSubspace(SubsetSelection),

    #[error("additive sums need all components inside a single ring")]
    MixedModeMismatch,

    #[error("no directed-sum decomposition: {0}")]
    NoDecomposition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
