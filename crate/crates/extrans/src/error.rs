use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("series variable mismatch: {0} vs {1}")]
    VarMismatch(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series tail bound {bound:e} exceeds tolerance {tol:e}")]
    TailBound { bound: f64, tol: f64 },

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("table mismatch: {0}")]
    TableMismatch(String),

    #[error("modulus {modulus} exceeds cap {cap}")]
    ModulusCap { modulus: u64, cap: u64 },

    #[error("divergent period integral: {0}")]
    Divergent(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("quadrature tolerance not met: estimated error {0:e}")]
    Quadrature(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
