use thiserror::Error;

use crate::pcset::PcSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime form is undefined for the empty set")]
    EmptySet,

    #[error("unsupported genus cardinality {0} (supported: 3, 4, 6)")]
    UnsupportedGenus(i64),

    #[error("{0} does not generate Z12 (generators are 1, 5, 7, 11)")]
    NotAGenerator(i64),

    #[error("{set} is not a member of the {genus} genus")]
    NotAMember { set: PcSet, genus: u8 },

    #[error("pitch class {note} is not in {cell}")]
    NoteNotInCell { note: u8, cell: PcSet },

    #[error("{0} is not a cell of a symmetric partition")]
    NotSymmetric(PcSet),

    #[error("genus mismatch: expected n={expected}, found n={found}")]
    GenusMismatch { expected: u8, found: u8 },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown export format {0:?} (expected dot or json)")]
    UnknownFormat(String),

    #[error("cycles are only defined in bridge regions")]
    CyclesInArthropod,

    #[error("invalid cycle length range {min}..={max} for n={n} (need 4 <= min <= max <= {})", 2 * *n as usize)]
    CycleRange { min: usize, max: usize, n: u8 },
}
