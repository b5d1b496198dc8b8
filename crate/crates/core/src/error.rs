use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} components, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("conflicting squares for pair ({0}, {1})")]
    ConflictingSquare(String, String),

    #[error("square ({0}, {1}) must relate letters of two distinct colors")]
    BadSquare(String, String),

    #[error("incomplete square map: {0} cross-color pairs have no square")]
    IncompleteSquares(usize),

    #[error("elements belong to different presentations")]
    PresentationMismatch,

    #[error("degree {requested} is not below {available}")]
    FactorizationRange {
        requested: String,
        available: String,
    },

    #[error("element has no atom of color {0}")]
    EmptyColor(usize),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("operation requires a strict presentation (color {0} is empty)")]
    NotStrict(usize),

    #[error("`{0}` is not a member of the code")]
    NotInCode(String),

    #[error("not a prefix code: {0} and {1} are comparable")]
    NotPrefixCode(String, String),

    #[error("code bijection is not essential: {0} is not a maximal code")]
    NotEssential(&'static str),

    #[error("invalid code bijection: {0}")]
    Bijection(String),

    #[error("refinement degree {requested} is below the code degree {required}")]
    Refinement { requested: String, required: String },

    #[error("unknown group generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid self-similar action: {0}")]
    Action(String),

    #[error("relator {0}: {1}")]
    Relator(String, String),

    #[error("fixture check failed: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
