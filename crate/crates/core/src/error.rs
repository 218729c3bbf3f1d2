use thiserror::Error;

use crate::transfer::{Obstruction, TransferMove};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,

    #[error("partition parts must be positive, found {0}")]
    NonPositivePart(i64),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("n must be at least 1, got {0}")]
    InvalidWeight(i64),

    #[error("partitions have different weights ({left} and {right})")]
    WeightMismatch { left: usize, right: usize },

    #[error("move {mv} is out of range for a partition with support size {t}")]
    MoveOutOfRange { mv: TransferMove, t: usize },

    #[error("move {mv} is not admissible: {reason}")]
    Inadmissible {
        mv: TransferMove,
        reason: Obstruction,
    },

    #[error("invalid local type: {0}")]
    InvalidLocalType(String),

    #[error("cannot classify an empty clique")]
    EmptyClique,

    #[error("moves {0:?} share neither a removable nor an addable corner")]
    NoCommonCorner(Vec<TransferMove>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
