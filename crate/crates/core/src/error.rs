use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown lattice element `{0}`")]
    UnknownElement(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("`{a}` and `{b}` have no unique {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },
    #[error("order has no global {0}")]
    Unbounded(&'static str),
    #[error("lattice is not a frame (distributivity fails at `{0}`, `{1}`, `{2}`)")]
    NotAFrame(String, String, String),
    #[error("lattice is not a chain")]
    NotAChain,
    #[error("fuzzy sets are over different base sets")]
    BaseMismatch,
    #[error("fuzzy sets take values in different lattices")]
    LatticeMismatch,
    #[error("family of fuzzy sets is empty")]
    EmptyFamily,
    #[error("family is not closed under {0}")]
    FamilyNotClosed(&'static str),
    #[error("invalid L-topological space: {0}")]
    InvalidSpace(String),
    #[error("fuzzy α-cut has empty support")]
    EmptyCutSupport,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("size {n} exceeds the enumeration bound {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
