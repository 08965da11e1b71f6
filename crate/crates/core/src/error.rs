use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no connected sample for G({n}, {p}) after {attempts} attempts")]
    RetryCapExhausted { n: usize, p: f64, attempts: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("Jacobi iteration did not converge: {0}")]
    NonConvergence(String),

    #[error("series did not reach tolerance within {terms} terms")]
    SeriesTruncation { terms: usize },

    #[error("floating-point overflow in {0}")]
    Overflow(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Numerical failures (as opposed to bad input) map to their own exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence(_) | Error::SeriesTruncation { .. } | Error::Overflow(_)
        )
    }

    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::Malformed {
            line,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
