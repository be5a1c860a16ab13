use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hyperplane normal vector is zero")]
    ZeroNormal,
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate hyperplane {0}")]
    DuplicateHyperplane(String),
    #[error("index {index} out of range for {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("F_{p}^{dim} has more points than the budget of {budget}")]
    DimensionTooLarge { p: u64, dim: usize, budget: u64 },
    #[error("base sign vector is not a region")]
    BaseNotFound,
    #[error("inconsistent Pak label for region {0}")]
    InconsistentLabel(String),
    #[error("region is not in the chamber x1 > x2 > ... > xn")]
    NotInBaseChamber,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
