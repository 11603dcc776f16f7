use thiserror::Error;

/// Errors raised by graph construction and the analyses built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on `{label}` (arcs (i, i) are not allowed)")]
    SelfLoop { line: usize, label: String },

    #[error("adjacency matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("adjacency matrix has a nonzero diagonal entry at ({index}, {index})")]
    NonzeroDiagonal { index: usize },

    #[error("adjacency matrix entry ({row}, {col}) is `{value}`, expected 0 or 1")]
    InvalidEntry {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("expected {expected} labels for a {expected}x{expected} matrix, got {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("duplicate node label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("endpoints must be distinct, got `{0}` twice")]
    SameEndpoints(String),

    #[error("node `{0}` cannot be a member of its own contesting set")]
    SelfContest(String),

    #[error("{operation} is limited to {limit} nodes, graph has {nodes}")]
    GuardExceeded {
        operation: &'static str,
        nodes: usize,
        limit: usize,
    },

    #[error("beta = {beta} is at or beyond the spectral bound 1/lambda_max = {bound}")]
    SpectralBound { beta: f64, bound: f64 },

    #[error("damping factor {0} is outside (0, 1)")]
    InvalidDamping(f64),

    #[error("{0} did not converge")]
    NonConvergent(&'static str),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

impl Error {
    /// Whether this error is a size guard or numeric limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::GuardExceeded { .. } | Error::SpectralBound { .. } | Error::NonConvergent(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
