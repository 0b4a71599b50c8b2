use thiserror::Error;

use crate::mis::SolverStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring spec {input:?}: {reason}")]
    ParseSpec { input: String, reason: String },

    #[error("a ring spec needs at least one factor")]
    EmptySpec,

    #[error("ring has {vertices} non-trivial ideals, over the vertex budget of {budget}")]
    VertexBudget { vertices: u128, budget: usize },

    #[error("ideal vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("level {level} out of range for factor {factor} (max {max})")]
    LevelOutOfRange { factor: usize, level: u32, max: u32 },

    #[error("ideal {0} is trivial (zero or the whole ring)")]
    TrivialIdeal(String),

    #[error("vertex id {id} out of range for graph of order {order}")]
    InvalidVertex { id: usize, order: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {vertices} vertices, over the oracle cap of {cap}")]
    OracleCap { vertices: usize, cap: usize },

    #[error("solver exceeded its node budget of {budget} ({} nodes explored)", stats.nodes)]
    NodeBudget { budget: u64, stats: SolverStats },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
