use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("empty input")]
    EmptyInput,
    #[error("loop edge at vertex {vertex} (line {line})")]
    LoopEdge { line: usize, vertex: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has an odd number of vertices ({0})")]
    OddVertexCount(usize),
    #[error("graph has no vertices")]
    NoVertices,
    #[error("negative weight on edge {0}")]
    NegativeWeight(usize),
    #[error("weight vector has length {got}, graph has {expected} edges")]
    WeightLength { expected: usize, got: usize },
    #[error("graph is not {0}-regular")]
    NotRegular(u32),
    #[error("graph is not an {r}-graph: odd cut of size {cut} around {witness}")]
    NotRGraph {
        r: u32,
        cut: String,
        witness: VertexSet,
    },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge {0} lies in no perfect matching")]
    EdgeInNoMatching(usize),
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rejection budget exhausted after {0} attempts")]
    RejectionBudgetExhausted(usize),
    #[error("vector is not a fractional 1-factor: {0}")]
    NotInPolytope(String),
    #[error("integer overflow while scaling weights")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable snake_case identifier, used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::EmptyInput => "empty_input",
            Error::LoopEdge { .. } => "loop_edge",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::OddVertexCount(_) => "odd_vertex_count",
            Error::NoVertices => "no_vertices",
            Error::NegativeWeight(_) => "negative_weight",
            Error::WeightLength { .. } => "weight_length",
            Error::NotRegular(_) => "not_regular",
            Error::NotRGraph { .. } => "not_r_graph",
            Error::NoPerfectMatching => "no_perfect_matching",
            Error::EdgeInNoMatching(_) => "edge_in_no_matching",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::UnknownGenerator(_) => "unknown_generator",
            Error::RejectionBudgetExhausted(_) => "rejection_budget_exhausted",
            Error::NotInPolytope(_) => "not_in_polytope",
            Error::Overflow => "overflow",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
        }
    }

    /// Process exit status: 1 for findings about the graph, 2 for bad input
    /// or parameters, 3 for exhausted caps and budgets.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::RejectionBudgetExhausted(_) | Error::Overflow => 3,
            Error::Parse { .. }
            | Error::EmptyInput
            | Error::LoopEdge { .. }
            | Error::VertexOutOfRange { .. }
            | Error::NegativeWeight(_)
            | Error::WeightLength { .. }
            | Error::InvalidParameter(_)
            | Error::UnknownGenerator(_)
            | Error::Io(_) => 2,
            Error::OddVertexCount(_)
            | Error::NoVertices
            | Error::NotRegular(_)
            | Error::NotRGraph { .. }
            | Error::NoPerfectMatching
            | Error::EdgeInNoMatching(_)
            | Error::NotInPolytope(_)
            | Error::Internal(_) => 1,
        }
    }
}
