use thiserror::Error;

use crate::geometry::COORD_BOUND;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate ({x}, {y}) at index {index} exceeds the bound |c| <= {COORD_BOUND}")]
    CoordinateOutOfRange { index: usize, x: i64, y: i64 },

    #[error("a drawing needs at least 3 vertices, got {0}")]
    TooFewPoints(usize),

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("points {:?} are collinear", .0)]
    GeneralPositionViolation([usize; 3]),

    #[error("degenerate segment: both endpoints are equal")]
    DegenerateSegment,

    #[error("vertex index {index} out of range for a drawing with {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("unsupported hull profile {0:?}")]
    UnsupportedShape(Vec<usize>),

    #[error("kite at origin {0} is convex")]
    NotConcave(usize),

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("witness does not match rule `{0}`")]
    WitnessMismatch(&'static str),

    #[error("generation budget exceeded after {attempts} attempts")]
    GenerationBudgetExceeded { attempts: u64 },

    #[error("{subsets} subsets exceed the enumeration budget of {limit}")]
    BudgetExceeded { subsets: u128, limit: u128 },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid search parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
