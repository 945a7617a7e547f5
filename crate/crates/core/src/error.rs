//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong when parsing or validating combinatorial
/// objects, or when an exact computation cannot be carried out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty block in partition text")]
    EmptyBlock,
    #[error("invalid element token `{0}`")]
    BadToken(String),
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("duplicate element {0}")]
    DuplicateElement(usize),
    #[error("missing element {0}")]
    MissingElement(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid arc endpoints ({lo}, {hi})")]
    BadArc { lo: usize, hi: usize },
    #[error("({lo}, {hi}) is not an arc of the diagram")]
    NotAnArc { lo: usize, hi: usize },
    #[error("block of size {0} where a matching requires size 2")]
    BlockSizeNotTwo(usize),
    #[error("ground set size {0} is odd, cannot be perfectly matched")]
    OddGroundSet(usize),
    #[error("size mismatch: {0} pairs vs {1} pairs")]
    SizeMismatch(usize, usize),
    #[error("q-integer [k]_q requires k >= 1")]
    ZeroQInt,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient overflow in exact integer arithmetic")]
    Overflow,
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("statistic `{stat}` is not defined for {family}")]
    StatisticNotApplicable { stat: String, family: String },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("n = {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("bijection contract violated: {0}")]
    ContractViolation(String),
}
