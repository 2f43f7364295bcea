use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the decision engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Zero or constant polynomial where a nonconstant one is required.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A coefficient violates a documented restriction (e.g. c = 0 in a values polynomial).
    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    /// A caller-certified precondition does not actually hold.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Malformed or mismatched input (shapes, variables, parse failures).
    #[error("input error: {0}")]
    Input(String),

    /// The algebra has no primitive element, so no injective linear form exists.
    #[error("no primitive element: {0}")]
    NoPrimitiveElement(String),

    /// The deterministic coefficient search ran out of candidates.
    #[error("search exhausted after {candidates} candidates per coordinate")]
    SearchExhausted { candidates: usize },

    /// The inputs do not satisfy the hypothesis of the construction.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// An internal consistency check failed; this is a bug, not a user error.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
