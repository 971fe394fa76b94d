//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Structural misuse of value types (mismatched exponent-vector lengths,
/// exponent underflow/overflow) panics instead; those conditions cannot be
/// produced from validated inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generator list was empty.
    #[error("generator list is empty")]
    EmptyInput,

    /// A generator was zero; generators must be positive.
    #[error("generator must be positive, got 0")]
    NonPositiveGenerator,

    /// The generators do not generate all of the integers.
    #[error("generator gcd = {0} (must be 1)")]
    GcdNotOne(u64),

    /// A configured resource cap was exceeded during basis computation.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An argument violated an operation's stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
}
