use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or querying a model.
#[derive(Debug, Error)]
pub enum Error {
    #[error("model has no worlds")]
    EmptyDomain,
    #[error("duplicate world label {0:?}")]
    DuplicateWorld(String),
    #[error("unknown world label {0:?}")]
    UnknownWorld(String),
    #[error("evidence piece #{index} is empty")]
    EmptyEvidencePiece { index: usize },
    #[error("evidence piece #{index} mentions {label:?}, which is outside the domain")]
    EvidenceOutsideDomain { index: usize, label: String },
    #[error("the whole domain is not listed as a piece of evidence (strict mode)")]
    MissingUnit,
    #[error("attack relation violates condition {condition}: {detail}")]
    AttackInvalid { condition: u8, detail: String },
    #[error("attack pair mentions {0}, which is not an open of the generated topology")]
    AttackSetNotOpen(String),
    #[error("attack pair mentions the empty set; edges on the empty set are added automatically")]
    AttackPairEmpty,
    #[error("operands belong to different domains")]
    DomainMismatch,
    #[error("domain too large: {detail}")]
    DomainTooLarge { detail: String },
    #[error("search budget exceeded: {detail}")]
    SearchBudgetExceeded { detail: String },
    #[error(
        "belief characterizations disagree on {prop}: \
         shrink-every-open gives {definitional}, justification form gives {justification}"
    )]
    CharacterizationMismatch {
        prop: String,
        definitional: bool,
        justification: bool,
    },
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("syntax error at byte {position}: found {found}, expected {}", expected.join(" | "))]
    Syntax {
        position: usize,
        found: String,
        expected: Vec<String>,
    },
    #[error("world {0:?} has non-positive mass")]
    ZeroMassWorld(String),
    #[error("world {0:?} has negative mass")]
    NegativeMass(String),
    #[error("masses sum to {got}, expected exactly 1")]
    MassNotNormalized { got: String },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("invalid atom name {0:?} (expected [a-z][a-z0-9_]*)")]
    InvalidAtomName(String),
    #[error("invalid neighborhood family: {0}")]
    InvalidNeighborhood(String),
    #[error("random generation exhausted its retries: {detail}")]
    GenerationRetryExhausted { detail: String },
    #[error("unknown sweep property {0:?}")]
    UnknownProperty(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid model file: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
