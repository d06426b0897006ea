//! Error types shared across the library.

use thiserror::Error;

/// Errors raised by graph construction and the search/extraction operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the supported range (e.g. interior size `s < 2`).
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// Bipartite pattern sides given in the wrong order (`s > t`).
    #[error("parameter order: expected s <= t, got s={s}, t={t}")]
    ParameterOrder { s: usize, t: usize },

    /// Graphs are capped at [`MAX_VERTICES`](crate::MAX_VERTICES) vertices.
    #[error("graph too large: {n} vertices (limit {limit})")]
    TooManyVertices { n: usize, limit: usize },

    /// Malformed graph data (loop, duplicate edge, endpoint out of range).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Malformed coloring data.
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// A ring admits no string-tie extraction (degenerate length, no usable
    /// apex, or an empty tail set for every candidate base).
    #[error("not extractable: {0}")]
    NotExtractable(String),

    /// Extraction needed an apex edge the host does not contain.
    #[error("host not complete: missing edge ({0}, {1})")]
    HostNotComplete(u32, u32),

    /// A forbidden family violated its invariants.
    #[error("invalid family: {0}")]
    InvalidFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
