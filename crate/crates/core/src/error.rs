use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("graph is not bipartite; odd cycle {odd_cycle:?}")]
    NotBipartite { odd_cycle: Vec<usize> },
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("graph6 supports at most {max} vertices, got {n}")]
    Graph6TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("graph has no edges; arc operators are 0-dimensional")]
    NoEdges,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("built-in generator supports n <= {max} (n <= {max_regular} for regular filters), got {n}; supply a graph6 stream instead")]
    GeneratorLimit {
        n: usize,
        max: usize,
        max_regular: usize,
    },
    #[error(transparent)]
    Walk(#[from] WalkError),
}
