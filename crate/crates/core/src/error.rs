use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inputs are projectively equal; cross product vanishes")]
    ParallelInput,
    #[error("point is not incident to the circle")]
    NotIncident,
    #[error("lines {0} and {1} are projectively equal")]
    DuplicateLine(usize, usize),
    #[error("a homogeneous coordinate must not be the zero vector")]
    ZeroVector,
    #[error("inconsistent structure: {0}")]
    InconsistentStructure(String),
    #[error("curves {a} and {b} meet at {count} events (expected exactly one)")]
    PairwiseCrossingViolation { a: usize, b: usize, count: usize },
    #[error("complex is not simplicial")]
    NotSimplicial,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("wires {a} and {b} cross {count} times")]
    CrossingCountError { a: usize, b: usize, count: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("labels have inconsistent lengths or count")]
    LabelLengthMismatch,
    #[error("graph with {0} vertices exceeds the size limit of {1}")]
    SizeLimit(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("drawing propagation is inconsistent at vertex {0}")]
    InconsistentDrawing(usize),
    #[error("outer polygons do not match")]
    OuterMismatch,
    #[error("outer corners could not be matched one-to-one")]
    CornerMatchFailure,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit status for the command-line tool; one code per variant.
    /// `1` is reserved for failed checks and `2` for usage errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } => 3,
            Error::Io(_) => 4,
            Error::BadParameter(_) => 5,
            Error::DuplicateLine(..) => 6,
            Error::ZeroVector => 7,
            Error::ParallelInput => 8,
            Error::NotIncident => 9,
            Error::InconsistentStructure(_) => 10,
            Error::PairwiseCrossingViolation { .. } => 11,
            Error::NotSimplicial => 12,
            Error::CrossingCountError { .. } => 13,
            Error::Disconnected => 14,
            Error::LabelLengthMismatch => 15,
            Error::SizeLimit(..) => 16,
            Error::InconsistentDrawing(_) => 17,
            Error::OuterMismatch => 18,
            Error::CornerMatchFailure => 19,
            Error::DegenerateInput(_) => 20,
        }
    }
}
