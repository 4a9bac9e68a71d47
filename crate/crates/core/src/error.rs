use std::path::PathBuf;

/// Errors produced by the core library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("{op} is limited to graphs with at most {limit} vertices (got {n})")]
    SizeLimit {
        op: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{family}({arg}) is not defined: {reason}")]
    Arity {
        family: &'static str,
        arg: usize,
        reason: &'static str,
    },

    #[error("graph spec parse error at byte {pos}: {msg}")]
    Spec { pos: usize, msg: String },

    #[error("corona family has {got} graphs but the base graph has {expected} vertices")]
    CoronaFamilyLength { expected: usize, got: usize },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("invalid edge list (line {line}): {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("independent set is already maximum")]
    AlreadyMaximum,

    #[error("index k = {k} out of range; need 0 <= k < alpha = {alpha}")]
    LevelOutOfRange { k: usize, alpha: usize },

    #[error("lambda must be positive (got {0})")]
    NonPositiveLambda(String),

    #[error("zero polynomial has no root census")]
    ZeroPolynomial,

    #[error("corona composition: {0}")]
    CoronaCompose(String),

    #[error("invalid window parameters: {0}")]
    Window(String),

    #[error("window [{lo}, {hi}] exceeds coefficient range [0, {alpha}]")]
    WindowOutOfRange { lo: usize, hi: usize, alpha: usize },

    #[error("the corona bound check needs a connected base graph")]
    Disconnected,

    #[error("filter expression error at byte {pos}: {msg}")]
    Filter { pos: usize, msg: String },

    #[error("{path}:{line}: {msg}")]
    Input {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
