use thiserror::Error;

/// A scalar literal or expression that failed to parse, with the byte offset of the problem
/// inside the whitespace-stripped literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {literal:?} at position {position}: {message}")]
pub struct LiteralError {
    pub literal: String,
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Literal(#[from] LiteralError),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails at basis triple ({i}, {j}, {k})")]
    JacobiFailure { i: usize, j: usize, k: usize },

    #[error("subspace not closed under the bracket: [b{left}, b{right}] leaves it")]
    NotClosed { left: usize, right: usize },

    #[error("not an r-matrix: classical Yang-Baxter tensor is nonzero at ({i}, {m}, {l})")]
    NotAnRMatrix { i: usize, m: usize, l: usize },

    #[error("not a Lie algebra homomorphism: fails on basis pair ({left}, {right})")]
    NotHomomorphism { left: usize, right: usize },

    #[error("matrices are linearly dependent (basis element {index})")]
    LinearlyDependent { index: usize },

    #[error("the involution X -> -X^T does not preserve the algebra (basis element {index})")]
    InvolutionNotPreserved { index: usize },

    #[error("irrational or non-real restricted roots: {0}")]
    IrrationalRoots(String),

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("element not invertible: {0}")]
    NotInvertible(String),

    #[error("not a twist: {0}")]
    NotATwist(String),

    #[error("module algebra axioms fail: {0}")]
    ModuleAxiomsFail(String),

    #[error("unsupported degree {0} (supported: {1})")]
    UnsupportedDegree(usize, &'static str),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for malformed or ill-shaped input, as opposed to a well-formed
    /// input that fails a mathematical condition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Self::Literal(_)
                | Self::DimensionMismatch { .. }
                | Self::IndexOutOfRange { .. }
                | Self::NotAntisymmetric { .. }
                | Self::LinearlyDependent { .. }
                | Self::UnsupportedDegree(..)
                | Self::Document(_)
        )
    }
}
