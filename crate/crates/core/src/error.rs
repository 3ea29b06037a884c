use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(String),

    #[error("vertex {0} is isolated; every spine vertex must meet an edge")]
    IsolatedVertex(VertexId),

    #[error("rotation at vertex {vertex} is not a permutation of its neighbors")]
    RotationMismatch { vertex: VertexId },

    #[error("recipe violates hypothesis ({hypothesis}): {detail}")]
    Recipe { hypothesis: u8, detail: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has {vertices} vertices, above the exact solver cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("improper coloring: {0} and {1} are adjacent and share color {2}")]
    ImproperColoring(String, String, usize),

    #[error("coloring assigns no color to {0}")]
    MissingColor(String),

    #[error("color {color} of {item} is outside the palette of size {palette}")]
    ColorOutOfPalette {
        item: String,
        color: usize,
        palette: usize,
    },

    #[error("verification failed: {0}")]
    Verification(String),
}
