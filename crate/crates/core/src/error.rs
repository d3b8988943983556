use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group spec `{0}`")]
    MalformedSpec(String),
    #[error("quaternion order must be 2^k with k >= 3, got {0}")]
    BadQuaternionOrder(usize),
    #[error("semidihedral order must be 2^k with k >= 4, got {0}")]
    BadSemidihedralOrder(usize),
    #[error("dihedral order must be even and at least 4, got {0}")]
    BadDihedralOrder(usize),
    #[error("Heisenberg group needs a prime, got {0}")]
    NotPrime(usize),
    #[error("direct product with zero factors")]
    EmptyProduct,
    #[error("group order {0} exceeds the cap of {cap}", cap = crate::bitset::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("subgroup count exceeded the limit of {0}")]
    TooManySubgroups(usize),
    #[error("subgroup is not contained in the enclosing subgroup")]
    NotContained,
    #[error("subgroup is not normal in the enclosing subgroup")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("class index {0} out of range")]
    BadClass(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in exact solve")]
    Overflow,
    #[error("lattice cache mismatch: {0}")]
    CacheMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
