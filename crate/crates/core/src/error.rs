use thiserror::Error;

/// Errors produced by the library.
///
/// Everything except [`Error::OracleDisagreement`] and
/// [`Error::TheoremViolation`] is a user error: the input violated a
/// documented precondition. Those two indicate that two independent
/// computations contradict each other, which can only be a bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a face: {0}")]
    NotAFace(String),

    #[error("vertex set is not contained in the vertex set of the complex: {0}")]
    NotASubset(String),

    #[error("label collision: {0}")]
    LabelCollision(String),

    #[error("unknown label: {0}")]
    UnknownLabel(String),

    #[error("operation requires pure complex")]
    RequiresPure,

    #[error("complex is not connected")]
    Disconnected,

    #[error("field required: the integers are not a valid coefficient ring here")]
    FieldRequired,

    #[error("vertex cap exceeded: complex has {vertices} vertices, cap is {cap}")]
    VertexCap { vertices: usize, cap: usize },

    #[error("invalid coefficient specification: {0}")]
    InvalidCoefficients(String),

    #[error("elements are not comparable: {0} is not below {1}")]
    NotComparable(String, String),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("poset is not graded")]
    Ungraded,

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("non-generic weights: flats {first} and {second} both have weight {weight}")]
    NonGeneric {
        first: String,
        second: String,
        weight: String,
    },

    #[error("threshold {threshold} violates t <= min(0, w(A)) with w(A) = {total}")]
    ThresholdPrecondition { threshold: String, total: String },

    #[error("rank {k} out of range: need 1 < k < {rank}")]
    RankOutOfRange { k: usize, rank: usize },

    #[error("atom {0} is not positive")]
    NotPositive(String),

    #[error(
        "theorem violation: positive flat graph is disconnected ({} | {})",
        component.join(","),
        rest.join(",")
    )]
    TheoremViolation {
        component: Vec<String>,
        rest: Vec<String>,
    },

    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors that signal an internal inconsistency rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::OracleDisagreement(_) | Error::TheoremViolation { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
