use thiserror::Error;

use crate::polygon::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("vertex {0} is not a vertex of the polygon")]
    UnknownVertex(u32),

    #[error("invalid edge {edge}: {reason}")]
    InvalidEdge { edge: Edge, reason: &'static str },

    #[error("diagonals {first} and {second} cross")]
    Crossing { first: Edge, second: Edge },

    #[error("a triangulation of an {n}-gon has {expected} diagonals, got {found}")]
    Maximality {
        n: usize,
        expected: usize,
        found: usize,
    },

    #[error("polygon with {n} vertices is too small for this operation (need at least {min})")]
    TooSmall { n: usize, min: usize },

    #[error("cannot flip {edge}: {reason}")]
    InvalidFlip { edge: Edge, reason: &'static str },

    #[error("triangulations live on different polygons")]
    PolygonMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no shelling of the triangulation at vertex {vertex}")]
    NoShelling { vertex: u32 },

    #[error("the witness set at vertex {vertex} is empty: k = {k} exceeds n/2 - 2 for n = {n}")]
    EmptyOmega { vertex: u32, k: usize, n: usize },

    #[error("resource budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("cannot parse {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(literal: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            literal: literal.to_owned(),
            reason: reason.into(),
        }
    }
}
