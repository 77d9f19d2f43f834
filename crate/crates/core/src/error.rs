use thiserror::Error;

/// Errors raised by the exact-polynomial toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller handed in a value that violates the operation's contract.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A Sturm-based operation received a polynomial that is not squarefree;
    /// the caller must pass the radical.
    #[error("contract violation: polynomial is not squarefree (pass the radical)")]
    NotSquarefree,

    /// An operation requiring a hyperbolic input was given a polynomial with
    /// non-real zeros. Carries the Sturm evidence: the number of real roots
    /// counted with multiplicity against the degree.
    #[error("precondition violated: polynomial is not hyperbolic ({real_roots} real roots with multiplicity, degree {degree})")]
    NotHyperbolic { real_roots: usize, degree: usize },

    /// A pinch move whose amount or indices are out of range.
    #[error("invalid move: {0}")]
    InvalidMove(String),

    /// A classification entry point was called on an operator belonging to
    /// the other branch of the case split.
    #[error("wrong branch: {0}")]
    WrongBranch(String),

    /// Malformed serialized input (bad rational string, wrong lengths, ...).
    #[error("malformed input: {0}")]
    Malformed(String),
}
