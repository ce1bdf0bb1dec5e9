use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("infeasible part sizes: {0}")]
    InfeasibleSizes(String),
    #[error("density needs two nonempty sides")]
    EmptySide,
    #[error("density sides overlap")]
    OverlappingSides,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("arithmetic constraint violated: {0}")]
    ArithmeticConstraintViolated(String),
    #[error("graph on {n} vertices exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("tiling is not perfect: {0}")]
    NotPerfect(String),
    #[error("count identity violated: {0}")]
    CountIdentityViolated(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
