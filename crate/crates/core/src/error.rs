use thiserror::Error;

use crate::domain::DomainKind;

/// Errors produced by measure construction, queries, and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("world space with {vars} variables exceeds the cap of {cap}")]
    SpaceTooLarge { vars: usize, cap: usize },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("event is over a {0}-world space but the measure expects {1} worlds")]
    SpaceMismatch(usize, usize),

    #[error("cannot compare {0} and {1} values")]
    DomainMismatch(DomainKind, DomainKind),

    #[error("conditioning event is not in the conditionable family")]
    ConditioningUndefined,

    #[error("query conditions on an event outside the conditionable family: {0}")]
    QueryUndefined(String),

    #[error("measure carries no operator pair")]
    NotAlgebraic,

    #[error("operation needs a {expected} measure, got {got}")]
    WrongMeasureKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error("random-variable sets must be pairwise disjoint")]
    OverlappingSets,

    #[error("variable index {0} out of range for a {1}-variable space")]
    VariableOutOfRange(usize, usize),

    #[error("invalid dag: {0}")]
    InvalidDag(String),

    #[error("network is not compatible with the measure: {0}")]
    IncompatibleNetwork(String),

    #[error("node {node} has no table row for parent assignment {assignment}")]
    MissingCptRow { node: usize, assignment: String },

    #[error("chain product is undefined at node {node}")]
    UndefinedProduct { node: usize },

    #[error("query is d-separated, so no dependence witness can exist")]
    SeparatedQuery,

    #[error("cannot parse value: {0}")]
    ParseValue(String),
}
