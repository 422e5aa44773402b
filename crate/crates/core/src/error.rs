use thiserror::Error;

/// Errors raised while building or checking the combinatorial and geometric objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid minimal polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("polynomial is reducible over the rationals")]
    ReduciblePolynomial,
    #[error("isolating interval contains {0} roots, expected exactly 1")]
    RootCount(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid Coxeter diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram is not of finite type (Gram matrix not positive definite)")]
    NotFiniteType,
    #[error("Coxeter graph is not 2-colorable")]
    NotBipartite,
    #[error("scalar type cannot represent this diagram: {0}")]
    UnsupportedScalar(String),
    #[error("group generation exceeded the cap of {0} elements")]
    GroupCapExceeded(usize),
    #[error("simplex budget of {0} faces exceeded")]
    BudgetExceeded(usize),
    #[error("root order is inconsistent: {0}")]
    RootOrder(String),
    #[error("element does not precede the Coxeter element")]
    NotBelowCoxeter,
    #[error("X(c) has a maximal simplex with {found} vertices, expected {expected}")]
    Impure { expected: usize, found: usize },
    #[error("a face-chain degenerates under f: {0}")]
    DegenerateChain(String),
    #[error("genericity violated: ray {0} is orthogonal to v")]
    NotGeneric(usize),
    #[error("vector is not on the positive side of v")]
    NotPositive,
    #[error("facet {0:?} has linearly dependent vertices")]
    DependentFacet(Vec<usize>),
    #[error("I - c is singular; the action is not essential")]
    NotEssential,
}

pub type Result<T> = std::result::Result<T, Error>;
