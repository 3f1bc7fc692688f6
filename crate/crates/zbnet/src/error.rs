//! Error types shared across the crate.

use thiserror::Error;

use crate::net::Role;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("duplicate node label: {0}")]
    DuplicateLabel(String),
    #[error("both node sets have role {0:?}; a two-mode network needs distinct roles")]
    SameRole(Role),
    #[error("inner node sets of the product do not match")]
    DimensionMismatch,
    #[error("negative weight")]
    NegativeWeight,
    #[error("partition or vector does not cover this node set")]
    PartitionMismatch,
    #[error("partition class {0} has no label")]
    ClassOutOfRange(u32),
    #[error("loop on node {0} in an undirected network")]
    LoopInUndirected(usize),
    #[error("node index {0} out of range")]
    NodeOutOfRange(usize),
}

#[derive(Debug, Error)]
pub enum PajekError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Net(#[from] NetError),
}

impl PajekError {
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        PajekError::Syntax {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum EntityError {
    #[error("empty author name")]
    EmptyName,
    #[error("conflicting unification rules for key {key}: {details}")]
    ConflictingRules { key: String, details: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum AnalyticsError {
    #[error("subject MSC set is empty")]
    EmptySubject,
    #[error("no samples at or above x_min = {0}")]
    NoSamplesAboveXmin(u64),
    #[error("all samples equal x_min = {0}; the likelihood is degenerate")]
    DegenerateSample(u64),
    #[error("island size bounds must satisfy 1 < min <= max, got [{0}, {1}]")]
    BadIslandBounds(usize, usize),
    #[error(transparent)]
    Net(#[from] NetError),
}
