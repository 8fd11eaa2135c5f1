//! Instance generators for hard languages: filter sequences, shuffle
//! reductions, 3-partition encodings, quotients, and random instances.

mod filters;
mod gadgets;
pub mod random;

pub use filters::{filter_aabb_from_ab, filter_ab_from_power, filter_ustar_from_ab, FilterSequence};
pub use gadgets::{
    gen_tagged_shuffle, gen_unary3partition, quotient_reduce, reduce_abb, shuffle_reduce, shuffle_reduce_checked,
    three_partition_exists,
};

use crate::dag::DagError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("filter word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Dag(#[from] DagError),
}
