use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not vertex decomposable")]
    NotVertexDecomposable,
    #[error("invalid shedding decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("layer count must be at least 1, got {0}")]
    InvalidLayerCount(usize),
    #[error("exponent must be at least 1, got {0}")]
    InvalidPower(usize),
    #[error("graph has no edges; its cover ideal is not defined here")]
    EdgelessGraph,
    #[error("ideal is zero")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ambient variable lists differ")]
    AmbientMismatch,
    #[error("too many variables for a bitmask computation ({0} > 64)")]
    TooManyVariables(usize),
    #[error("too many generators for this method ({got} > {max})")]
    TooManyGenerators { got: usize, max: usize },
    #[error("exponent {exponent} of variable {var} exceeds the {layers} polarization layers")]
    PolarizationOverflow { var: usize, exponent: u32, layers: u32 },
    #[error("malformed family specification: {0}")]
    MalformedFamily(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
