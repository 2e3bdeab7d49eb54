use thiserror::Error;

/// Errors raised by graph construction, labeling and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: a cycle needs at least 3 vertices")]
    InvalidOrder(usize),

    #[error("edge ({0}, {1}) is a loop")]
    Loop(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range ({count} edges)")]
    EdgeOutOfRange { index: usize, count: usize },

    #[error("invalid circulant: {0}")]
    InvalidCirculant(String),

    #[error("step {step} shares a factor with {m}; non-generator steps are not supported")]
    UnsupportedStep { m: usize, step: usize },

    #[error("odd order {0}: the translated C-labeling of a circulant only works for even order")]
    OddOrder(usize),

    #[error("invalid merge plan: {0}")]
    InvalidPlan(String),

    #[error("merging block {block:?} would create a loop on edge ({u}, {v})")]
    MergeLoop { block: Vec<usize>, u: usize, v: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("labeling is not local antimagic: adjacent vertices {0} and {1} share a sum")]
    NotLocalAntimagic(usize, usize),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("labeling matrix is ambiguous: parallel edges between {0} and {1}")]
    ParallelEdges(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid union directive: {0}")]
    InvalidDirective(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
