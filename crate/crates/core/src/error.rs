use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("duplicate interpolation node at position {index}")]
    DuplicateNode { index: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("degenerate parametrization: {0}")]
    DegenerateParametrization(String),

    /// The unstructured system never reached a one-dimensional nullspace.
    #[error("degenerate input: nullspace has dimension {nullity} after {extra_nodes} extra nodes")]
    DegenerateInput { nullity: usize, extra_nodes: usize },

    /// A Bareiss step produced a nonzero remainder; this breaks the minor identity.
    #[error("inexact division in fraction-free elimination")]
    InexactDivision,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
