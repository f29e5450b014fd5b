//! Shared error types.

use thiserror::Error;

/// A requested computation exceeds a configured size guard.
///
/// The guards exist because several operations are exhaustive sweeps
/// (`n!` permutations, `(p+1)^len` compositions, all monomial derivative
/// operators of a given order). Callers that know what they are doing can
/// use the `*_with_guard` / `*_with_limits` variants to raise them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{quantity} = {value} exceeds the configured limit {limit}")]
pub struct RangeError {
    pub quantity: &'static str,
    pub value: u64,
    pub limit: u64,
}

impl RangeError {
    pub fn new(quantity: &'static str, value: u64, limit: u64) -> Self {
        RangeError {
            quantity,
            value,
            limit,
        }
    }
}

/// A word that is not a bijection of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid permutation word: {reason}")]
pub struct InvalidPermutation {
    pub reason: String,
}

/// Diagram columns that do not fit the ambient grid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid diagram: {reason}")]
pub struct InvalidDiagram {
    pub reason: String,
}
