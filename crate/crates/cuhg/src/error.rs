use thiserror::Error;

/// Errors shared across the crate. Theorem checks never return these for a
/// failed verdict; they are reserved for malformed inputs and solver failure.
#[derive(Debug, Error)]
pub enum Error {
    #[error("phase has modulus {modulus}, expected a complex unit (|omega| = 1 within 1e-9)")]
    NonUnitPhase { modulus: f64 },

    #[error("vertex {vertex} appears twice in edge {edge}")]
    DuplicateIncidence { vertex: usize, edge: usize },

    #[error("vertex index {index} out of range for {n} vertices")]
    BadVertexIndex { index: usize, n: usize },

    #[error("edge index {index} out of range for {m} edges")]
    BadEdgeIndex { index: usize, m: usize },

    #[error("vertices {i} and {j} are not both incident to edge {edge}")]
    NotAdjacentInEdge { i: usize, j: usize, edge: usize },

    #[error("switching function has {got} values, hypergraph needs {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("hypergraph has {n} vertices, brute force is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("normalized Laplacian undefined: vertices {vertices:?} have degree 0")]
    ZeroDegreeVertex { vertices: Vec<usize> },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix deviates from Hermitian by {max_dev}")]
    NotHermitian { max_dev: f64 },

    #[error("Jacobi sweep limit reached ({sweeps} sweeps) without convergence")]
    NoConvergence { sweeps: usize },

    #[error("similarity diagonal entry {index} is not strictly positive")]
    NonPositiveDiagonal { index: usize },

    #[error("Rayleigh quotient of the zero vector is undefined")]
    ZeroVector,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
