use thiserror::Error;

/// Reasons a relation, cover list or antichain is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{0} elements exceed the supported maximum of 64")]
    TooLarge(usize),
    #[error("relation is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("element 0 is not the bottom: 0 is not below {0}")]
    BottomNotZero(usize),
    #[error("element 1 is not the top: {0} is not below 1")]
    TopNotOne(usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("element {element} is out of range for a lattice of size {n}")]
    OutOfRange { element: usize, n: usize },
    #[error("{0} < {1} is not a cover relation")]
    NotACover(usize, usize),
    #[error("cover pair {0} < {1} listed twice")]
    DuplicateCover(usize, usize),
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("malformed cover list: {0}")]
    Parse(String),
    #[error("not a lattice-antichain: {0}")]
    NotLatticeAntichain(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Errors from the automorphism and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("automorphism group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("size {n} is above the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
