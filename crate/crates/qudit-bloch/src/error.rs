use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the qudit-bloch library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("entry count {found} does not match {rows}x{cols}")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("matrix is not Hermitian: max |A - A†| entry {deviation:.3e} exceeds tol {tol:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("trace is {trace} but must be 1 within tol {tol:.3e}")]
    TraceNotOne { trace: String, tol: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.6e} < -{tol:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64, tol: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid basis element label: {reason}")]
    InvalidLabel { reason: String },

    #[error("invalid angular momentum label: {reason}")]
    InvalidAngularMomentum { reason: String },

    #[error("dimension {dim} is not supported: {reason}")]
    InvalidDimension { dim: usize, reason: String },

    #[error("unknown basis family '{name}' (expected ggm, pob or wob)")]
    UnknownFamily { name: String },

    #[error("alpha = {alpha} outside the admissible interval [{min:.6}, 1]")]
    AlphaOutOfRange { alpha: f64, min: f64 },

    #[error("alpha = {alpha} is not in the entangled range [{threshold:.6}, 1] (states with alpha <= 1/(d+1) are separable)")]
    AlphaNotEntangled { alpha: f64, threshold: f64 },

    #[error("Bloch component list has length {found}, expected {expected}")]
    BadComponentCount { expected: usize, found: usize },

    #[error("guess state equals the entangled state: witness direction has zero norm")]
    ZeroDirection,

    #[error("expectation value has non-negligible imaginary part {imag:.3e} (operator not Hermitian enough)")]
    NotReal { imag: f64 },

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
