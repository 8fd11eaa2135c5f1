//! Labeled DAGs, string tuples, topological sorts, chain decompositions and
//! the rare/frequent split of string tuples.

mod chains;
mod labeled;
mod order;
mod parikh;
mod rarefreq;

pub use chains::{chain_partition, rich_antichain, width, width_and_antichain};
pub use labeled::{Instance, InstanceJson, LabeledDag, ShuffleInstance, VertexJson};
pub use order::{all_topological_sorts, topological_sorts, TopoSorts};
pub use parikh::{parikh_image, ParikhVector};
pub use rarefreq::{rare_frequent, RareFrequent};

use crate::lang::LangError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DagError {
    #[error("graph has a cycle")]
    Cycle,
    #[error("label symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
    #[error("edge mentions unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("instance parse error: {0}")]
    Parse(String),
    #[error("{what} exceeds the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error(transparent)]
    Lang(#[from] LangError),
}
