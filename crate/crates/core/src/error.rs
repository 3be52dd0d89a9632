use thiserror::Error;

/// Errors raised by group construction and the cohomology machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation domain mismatch: expected {expected} points, found {found}")]
    DomainMismatch { expected: usize, found: usize },
    #[error("computation exceeded the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not characteristic")]
    NotCharacteristic,
    #[error("subgroup is not stable under the action")]
    NotStable,
    #[error("element {0} does not have 2-power order")]
    NotTwoPowerOrder(usize),
    #[error("group of order {0} is not a 2-group")]
    NotTwoGroup(usize),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("not an involutive automorphism: {0}")]
    NotInvolution(String),
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
