use thiserror::Error;

use crate::enumerate::SearchStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("face sequence needs at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("face size {0} is below 3")]
    EntryTooSmall(usize),
    #[error("face counts are not integral at gon size {gon}")]
    NonIntegral { gon: usize },
    #[error("cannot parse face sequence {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("faces around vertex {0} do not close into a single cycle")]
    BrokenLink(usize),
    #[error("map is not valid: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("label {label} is out of range for degree {n}")]
    OutOfRange { label: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation is not an automorphism of the map")]
    NotAutomorphism,
    #[error("group order {order} exceeds the identification cap {cap}")]
    TooLarge { order: String, cap: u64 },
    #[error("generators act on {got} points, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Error)]
pub enum EnumError {
    #[error("node budget exhausted after {} nodes", .0.nodes)]
    BudgetExhausted(SearchStats),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: field `{field}`: {msg}")]
    Field { path: String, field: String, msg: String },
    #[error("{path}: invalid map: {report}")]
    Invalid { path: String, report: String },
}
