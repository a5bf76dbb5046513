use thiserror::Error;

/// Violations of the simple-graph invariants. Indices are stored 0-based and
/// displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge e{} is a self-loop", .edge + 1)]
    SelfLoop { edge: usize },
    #[error("edge e{} duplicates edge e{}", .edge + 1, .first + 1)]
    DuplicateEdge { edge: usize, first: usize },
    #[error("vertex {} out of range for {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Reasons an edge sequence does not yield an irreducible walk binomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("empty walk")]
    Empty,
    #[error("walk has odd length {0}")]
    OddLength(usize),
    #[error("edge e{} at position {} does not exist", .edge + 1, .position + 1)]
    EdgeOutOfRange { position: usize, edge: usize },
    #[error("edge at position {} does not continue the walk", .position + 1)]
    NotAWalk { position: usize },
    #[error("walk does not return to its start vertex")]
    NotClosed,
    #[error("edge e{} lands in both monomials", .edge + 1)]
    ReducibleBinomial { edge: usize },
}

/// Violated invariant of a binomial `x^u - x^v` over the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BinomialError {
    #[error("exponent vector has length {found}, graph has {expected} edges")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("edge e{} appears in both monomials", .edge + 1)]
    CommonFactor { edge: usize },
    #[error("A-degrees differ at vertex {}", .vertex + 1)]
    Unbalanced { vertex: usize },
    #[error("edge e{} has exponent {exponent}", .edge + 1)]
    ExponentTooLarge { edge: usize, exponent: u8 },
    #[error("zero binomial")]
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Binomial(#[from] BinomialError),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: {source}")]
    GraphLine { line: usize, source: GraphError },
    #[error("row {row}: {source}")]
    InvalidBinomial { row: usize, source: BinomialError },
    #[error("basis has {found} columns, graph has {expected} edges")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("walk search exceeded {max_walks} states")]
    LimitExceeded { max_walks: u64 },
    #[error("support of {support} edges exceeds the brute-force limit {limit}")]
    SupportTooLarge { support: usize, limit: usize },
    #[error("malformed walk support: {0}")]
    MalformedInput(BinomialError),
    #[error("oracle mismatch on {binomial}: {detail}")]
    OracleMismatch { binomial: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
