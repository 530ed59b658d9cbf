use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),

    #[error("invalid circulant: {0}")]
    InvalidCirculant(String),

    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("vertex {to} is not reachable from vertex {from}")]
    Unreachable { from: usize, to: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring uses {colors} colors; at most {max} are supported")]
    ColorCapacity { colors: usize, max: usize },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("formula not applicable: {0}")]
    Inapplicable(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
