use alloc::string::String;

use thiserror::Error;

use crate::brace::Violation;
use crate::products::{ActionViolation, CocycleViolation};

/// Malformed operation tables, detected before any axiom is checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("a brace needs at least one element")]
    Empty,
    #[error("order {0} does not fit 16-bit element indices")]
    TooLarge(usize),
    #[error("{table} table has {len} entries, expected {expected}")]
    Length { table: &'static str, len: usize, expected: usize },
    #[error("{table}[{index}] = {value} is out of range for order {order}")]
    OutOfRange { table: &'static str, index: usize, value: usize, order: usize },
}

/// Why a candidate lambda map does not define a brace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaViolation {
    #[error("lambda({a}, {b}) = {value} is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("lambda_{a} is not a bijection")]
    NotBijective { a: usize },
    #[error("lambda_{a} is not additive at ({b}, {c})")]
    NotAdditive { a: usize, b: usize, c: usize },
    #[error("lambda_(a·b) != lambda_a ∘ lambda_b for a = {a}, b = {b} (at {c})")]
    NotHomomorphism { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size guard: requested order {requested} exceeds the limit {limit}")]
    SizeGuard { requested: u128, limit: usize },
    #[error("analysis cap: order {order} exceeds the cap {cap}")]
    AnalysisCap { order: usize, cap: usize },
    #[error("malformed tables: {0}")]
    Structural(#[from] StructuralError),
    #[error("brace axiom violated: {0}")]
    NotABrace(Violation),
    #[error("invalid lambda map: {0}")]
    Lambda(LambdaViolation),
    #[error("invalid action: {0}")]
    InvalidAction(ActionViolation),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(CocycleViolation),
    #[error("hypothesis `{condition}` fails: {detail}")]
    Hypothesis { condition: &'static str, detail: String },
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn hypothesis(condition: &'static str, detail: impl Into<String>) -> Self {
        Error::Hypothesis { condition, detail: detail.into() }
    }

    pub(crate) fn precondition(detail: impl Into<String>) -> Self {
        Error::Precondition(detail.into())
    }
}
