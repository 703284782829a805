use crate::plane_graph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid plane graph: {0}")]
    InvalidGraph(ValidationReport),
    #[error("outer face cycle {0:?} does not match any traced face")]
    OuterFaceMismatch(Vec<usize>),
    #[error("operation needs at least {needed} vertices, graph has {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("graph is not a maximal plane graph")]
    NotMaximal,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("graph is not outerplane")]
    NotOuterplane,
    #[error("{points} points supplied for {vertices} vertices")]
    PointCountMismatch { points: usize, vertices: usize },
    #[error("points {0}, {1} and {2} are collinear")]
    NotGeneralPosition(usize, usize, usize),
    #[error("coloring leaves vertex {0} uncolored")]
    PartialColoring(usize),
    #[error("oracle limited to {cap} vertices, graph has {n}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("second graph has {n2} vertices but only {available} outerplane vertices were found")]
    SecondGraphTooLarge { n2: usize, available: usize },
    #[error("no drawing found: {0}")]
    DrawingFailed(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
