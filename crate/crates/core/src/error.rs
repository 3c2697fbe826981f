use thiserror::Error;

/// Errors produced by the engine.
///
/// Vertex ids carried in error payloads are 1-based, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("invalid vertex id {vertex} (graph has {n} vertices)")]
    InvalidVertexId { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("vector length {found} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector is not a {k}-cover")]
    NotACover { k: u32 },
    #[error("cover is not basic")]
    NotBasic,
    #[error("no decomposition into basic 1-covers found (anomaly: {0})")]
    DecompositionNotFound(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("drawing is not eligible for the sequence injection: {0}")]
    DrawingNotEligible(String),
    #[error("sequence is not weakly descending")]
    NotDescending,
    #[error("position {position} out of range 1..={limit}")]
    PositionOutOfRange { position: usize, limit: usize },
    #[error("search failed: {0}")]
    NotFound(String),
    #[error("graph is not unmixed")]
    NotUnmixed,
    #[error("lattice closure violated: {0}")]
    ClosureViolation(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("hypergraph has no faces")]
    NoFaces,
    #[error("search budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget { what: String, needed: u128, cap: u128 },
    #[error("growth degree did not stabilize up to k = {kmax}; bounds {lower} <= deg <= {upper}")]
    Unstable { kmax: u32, lower: u32, upper: u32 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
