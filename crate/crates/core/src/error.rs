use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, more than the supported maximum of {max}", max = crate::vset::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex sets overlap in {0:?}")]
    OverlappingSets(VertexSet),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("{0:?} is not a clique")]
    NotAClique(VertexSet),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("no component of G minus the terminals sees all three of them")]
    NoConnector,
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("graph is not sparse: {0:?} is not a clique")]
    NotSparse(VertexSet),
    #[error("(G, w) is not unbalanced for {pair}: {reason}")]
    NotUnbalanced { pair: String, reason: String },
    #[error("separations of {0} and {1} are not loosely non-crossing")]
    CrossingPairs(String, String),
    #[error("no marker path for {0}")]
    NoMarkerPath(String),
    #[error("component {0:?} of the union of A-sides lies in no single A-side")]
    UnassignedComponent(VertexSet),
    #[error("vertex {0} is not in the central bag")]
    NotInBag(usize),
    #[error("hypothesis violated at stage `{stage}`: {hypothesis}")]
    HypothesisViolated { stage: String, hypothesis: String },
    #[error("not found: {0}")]
    NotFound(String),

    #[error("graph has {n} vertices; the exact treewidth oracle is capped at {cap}")]
    OracleTooLarge { n: usize, cap: usize },
    #[error("separator search over {candidates} subsets exceeds the budget of {budget}")]
    SearchTooLarge { candidates: u128, budget: u64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("arithmetic overflow in exact weight computation")]
    WeightOverflow,
    #[error("invalid path lengths for {family}: {reason}")]
    InvalidLengths { family: &'static str, reason: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}
