use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("matrix has {0} columns; at most 64 are supported")]
    TooManyColumns(usize),
    #[error("row has width {found}, expected {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("corank {corank} exceeds the enumeration cap of {cap}")]
    CorankTooLarge { corank: usize, cap: usize },
    #[error("ground set has {size} elements; the exhaustive search cap is {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },
    #[error("the splitting set T must be nonempty")]
    EmptyT,
    #[error("label `{0}` is already in use")]
    LabelCollision(String),
    #[error("element `{0}` is a loop or a coloop")]
    LoopOrColoop(String),
    #[error("T contains the cocircuit {{{}}}", .0.join(","))]
    TContainsCocircuit(Vec<String>),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("matroid is not {n}-connected")]
    NotNConnected { n: usize },
    #[error("edge `{edge}` is not incident to vertex `{vertex}`")]
    EdgeNotAtV { edge: String, vertex: String },
    #[error("deg({vertex})={degree} < {required}")]
    DegreeTooSmall {
        vertex: String,
        degree: usize,
        required: usize,
    },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph has {0} vertices; at least 2 are needed")]
    TooFewVertices(usize),
    #[error("graph has {size} vertices; the cut search cap is {cap}")]
    TooManyVertices { size: usize, cap: usize },
    #[error("graph is not 3-connected (vertex connectivity {0})")]
    NotThreeConnected(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("self-loop at `{0}`: only simple graphs are supported")]
    SelfLoop(String),
    #[error(
        "parallel edge {0}: multigraphs are rejected, point splitting is defined on simple graphs"
    )]
    ParallelEdge(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no catalog entry named `{0}`")]
    UnknownCatalog(String),
}
