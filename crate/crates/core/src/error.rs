use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Table shape or entry problem, detected before any axiom is looked at.
    #[error("malformed semiring table: {0}")]
    MalformedTable(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("semiring axioms violated: {0}")]
    AxiomsViolated(String),
    #[error("element id {id} out of range for a carrier of size {size}")]
    ElementOutOfRange { id: usize, size: usize },
    #[error("operands live on carriers of different sizes ({0} vs {1})")]
    OwnerMismatch(usize, usize),
    #[error("{what} exceeds bound: {actual} > {bound}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        bound: usize,
    },
    #[error("relation is not an equivalence")]
    NotEquivalence,
    #[error("relation is not a congruence")]
    NotCongruence,
    #[error("the improper congruence has no quotient semiring (it would force 1 = 0)")]
    ImproperQuotient,
    #[error("subset is not an ideal")]
    NotIdeal,
    #[error("arity mismatch: expected {expected}, got {actual}")]
    Arity { expected: usize, actual: usize },
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("window mode: {0}")]
    Window(String),
}
