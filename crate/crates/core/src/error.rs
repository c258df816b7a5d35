use thiserror::Error;

/// Errors raised by graph construction, search and census operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the {cap}-vertex limit")]
    TooLarge { n: usize, cap: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("arcs {0}->{1} and {1}->{0} both present")]
    Antisymmetry(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not a tournament: vertices {0} and {1} are not adjacent")]
    NotTournament(usize, usize),

    #[error("graph contains a directed cycle")]
    Cyclic,

    #[error("{what}: {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("set {0:?} is not dominated")]
    Undominated(Vec<usize>),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by exceeding a size or work cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::CapExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
