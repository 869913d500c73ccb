use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partitions have different totals ({left} vs {right})")]
    MismatchedTotal { left: u32, right: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition of {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },

    #[error("the empty partition has no psi vector")]
    EmptyPartition,

    #[error("partition {0} has an odd part")]
    OddPart(Partition),

    #[error("partition {0} has an even part")]
    EvenPart(Partition),

    #[error("rank {rank} is outside the supported range {min}..={max}")]
    UnsupportedRank { rank: usize, min: usize, max: usize },

    #[error("rank mismatch ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("simple reflection index {index} out of range for {context}")]
    IndexOutOfRange { index: usize, context: String },

    #[error("element {element} is not in {context}")]
    NotInGroup { element: String, context: String },

    #[error("elements lie in different components")]
    ComponentMismatch,

    #[error("operation not supported for family {0}")]
    UnsupportedFamily(String),

    #[error("partition {partition} does not sum to the rank {rank}")]
    SumMismatch { partition: Partition, rank: usize },

    #[error("group has {size} elements, above the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("poset violation: {0}")]
    PosetViolation(String),

    #[error("partition {partition} is not valid for {family}")]
    InvalidForFamily { partition: Partition, family: String },

    #[error("invalid epsilon function: {0}")]
    InvalidEpsilon(String),

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("{0} has no unipotent elements in this characteristic")]
    NoUnipotents(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
