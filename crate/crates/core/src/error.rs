//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by library operations.
///
/// Each variant maps to exactly one CLI exit code; see the `hscalc` binary.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Two monomials (or a monomial and a ring) disagree on variable count.
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// Operands live in different ring contexts.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// An operation that needs a nonzero polynomial received zero.
    #[error("zero polynomial not allowed: {0}")]
    ZeroPolynomial(String),

    /// A generator list describes the zero ideal.
    #[error("zero ideal: generator list is empty or all zero")]
    ZeroIdeal,

    /// A value failed validation while building a domain object.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An m-primary (or other stated) precondition does not hold.
    #[error("precondition violation: {0}")]
    Precondition(String),

    /// Hilbert-Samuel values did not stabilize within the power cap.
    #[error("not stabilized within nMax = {cap}")]
    NotStabilized { cap: usize },

    /// The inferred polynomial degree disagrees with the ring's dimension.
    #[error("dimension mismatch: inferred d = {inferred}, ring declares d = {declared}")]
    DimensionMismatch { inferred: usize, declared: usize },

    /// A tangent-cone direction is not rational over Q.
    #[error("rationality error: {0}")]
    Rationality(String),

    /// A strict transform vanished identically (repeated component).
    #[error("non-reduced curve: {0}")]
    NonReduced(String),

    /// Blow-up recursion exceeded the safety depth cap.
    #[error("resolution depth cap {0} exceeded (is the curve reduced?)")]
    DepthExceeded(usize),

    /// A resource cap (standard-monomial box, power cap) was exceeded.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// A mathematically guaranteed invariant failed: an implementation bug.
    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),

    /// Text input could not be parsed.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
