use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("not a dyadic rational: {0}")]
    NotDyadic(String),
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("vector is not a lattice member")]
    NotInLattice,
    #[error("vector lies in 2 times the lattice")]
    InDoubleLattice,
    #[error("enumeration exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("pair is not pure: {0}")]
    NotPure(&'static str),
    #[error("profile matches none of the reference profiles")]
    UnknownProfile,
    #[error("calibration failure: {0}")]
    Calibration(String),
    #[error("group too large for this search: {0}")]
    SizeGuard(String),
    #[error("wrong group order: expected {expected}, got {got}")]
    WrongOrder { expected: u64, got: u64 },
    #[error("ambiguous class identification: {0}")]
    AmbiguousClasses(String),
    #[error("module error: {0}")]
    Module(String),
}

pub type Result<T> = core::result::Result<T, Error>;
