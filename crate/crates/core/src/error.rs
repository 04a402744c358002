use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("operation requires a connected graph; got {components} components")]
    Disconnected { components: usize },
    #[error("graph on {n} vertices exceeds the exhaustive-search limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("colouring covers {got} vertices but the graph has {expected}")]
    PartialColouring { expected: usize, got: usize },
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("colouring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColouring(usize, usize),
    #[error("convention infeasible at {ell} colours")]
    ConventionInfeasible { ell: usize },
    #[error("a rainbow path needs two distinct endpoints; got {0} twice")]
    SameEndpoints(usize),
    #[error("predicate undefined: graph admits no J^c-colouring")]
    NoJcColouring,
    #[error("input colouring does not satisfy the property")]
    PropertyFails,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("{what} = {value} outside supported range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
